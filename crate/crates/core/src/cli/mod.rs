//! Input language and command-line front end.

pub mod dsl;
pub mod run;

pub use dsl::{parse_spec, render, CoproductEntry, ParseError, Position, ProblemSpec};
pub use run::{main_with_args, parse_args, run_command, Flags, Report, TableRow, Verdict, COMMANDS, DEFAULT_MAX_DEGREE};

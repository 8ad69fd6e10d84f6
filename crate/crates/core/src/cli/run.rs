//! Command dispatch and reports.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify_module, equivalence_report};
use crate::cli::dsl::{parse_spec, ProblemSpec};
use crate::coalgebra::GradedCoalgebra;
use crate::cogroup::{tcm, Cogroup};
use crate::convolution::{
    antipode, check_hopf_antipode, convolution_inverse, convolve, indecomposables_check, is_antipode_surjective,
    left_convolution_inverse, random_element, GradedMap,
};
use crate::error::{Error, Result};
use crate::graded::CyclicGenerator;

pub const COMMANDS: [&str; 9] = [
    "check-commutative",
    "check-cocommutative",
    "check-cogroup",
    "check-hopf",
    "antipode",
    "inverse",
    "nu-eq-chi",
    "check-surjective",
    "classify",
];

pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub max_degree: Option<usize>,
    pub json: bool,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    /// `None` when the predicate does not apply.
    pub value: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub word: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub generators: Vec<CyclicGenerator>,
    pub max_degree: usize,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    pub exit_code: i32,
}

impl Report {
    fn new(command: &str, spec: &ProblemSpec, max_degree: usize) -> Self {
        Report {
            command: command.to_string(),
            ring: spec.ring.to_string(),
            generators: spec.module.generators().to_vec(),
            max_degree,
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            table: None,
            exit_code: 0,
        }
    }

    fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            value: Some(value),
        });
    }

    /// Exit code 1 when any applicable verdict is false.
    fn all_must_hold(&mut self) {
        if self.verdicts.iter().any(|v| v.value == Some(false)) {
            self.exit_code = 1;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        writeln!(s, "ring: {}", self.ring).unwrap();
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                if g.annihilator == 0 {
                    format!("{}[{}]", g.name, g.degree)
                } else {
                    format!("{}[{}] ann {}", g.name, g.degree, g.annihilator)
                }
            })
            .collect();
        writeln!(s, "generators: {}", if gens.is_empty() { "none".to_string() } else { gens.join(", ") }).unwrap();
        writeln!(s, "max_degree: {}", self.max_degree).unwrap();
        for v in &self.verdicts {
            let value = v.value.map_or("n/a".to_string(), |b| b.to_string());
            writeln!(s, "{}: {}", v.name, value).unwrap();
        }
        for w in &self.witnesses {
            writeln!(s, "witness: {w}").unwrap();
        }
        if let Some(rows) = &self.table {
            for r in rows {
                writeln!(s, "{} -> {}", r.word, r.image).unwrap();
            }
        }
        writeln!(s, "exit_code: {}", self.exit_code).unwrap();
        s
    }
}

/// Runs one command on a parsed problem.
pub fn run_command(spec: &ProblemSpec, command: &str, flags: &Flags) -> Result<Report> {
    if !COMMANDS.contains(&command) {
        return Err(Error::UnknownCommand(command.to_string()));
    }
    let d = flags.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let mut report = Report::new(command, spec, d);
    let coalgebra = spec.coalgebra();

    if command == "check-cocommutative" {
        report.verdict("cocommutative", coalgebra.is_cocommutative());
        report.all_must_hold();
        return Ok(report);
    }

    let cogroup = tcm(&coalgebra, d)?;
    let a = cogroup.algebra();
    match command {
        "check-commutative" => {
            let (ok, pair) = a.is_graded_commutative();
            report.verdict("graded_commutative", ok);
            if let Some((i, j)) = pair {
                let (x, y) = (a.generator(i), a.generator(j));
                let c = a.graded_commutator(&x, &y)?;
                report
                    .witnesses
                    .push(format!("[{}, {}] = {}", a.generator_name(i), a.generator_name(j), c));
            }
            report.all_must_hold();
        }
        "check-cogroup" => {
            let axioms = cogroup.check_axioms(d);
            for c in &axioms.checks {
                report.verdict(&c.law.replace(' ', "_"), c.passed);
                if let (Some(w), Some(deg)) = (&c.failure, c.failure_degree) {
                    report.witnesses.push(format!("{} fails at {w} (degree {deg})", c.law));
                }
            }
            report.all_must_hold();
        }
        "check-hopf" => {
            let chi = antipode(&cogroup);
            for c in &check_hopf_antipode(&cogroup, &chi).checks {
                report.verdict(&c.law.replace(' ', "_"), c.passed);
                if let (Some(w), Some(deg)) = (&c.failure, c.failure_degree) {
                    report.witnesses.push(format!("{} fails at {w} (degree {deg})", c.law));
                }
            }
            let generic = convolution_inverse(&cogroup, &GradedMap::identity(&cogroup))?;
            report.verdict("word_recursion_matches_convolution_inverse", generic == chi);
            spot_check_group_laws(&cogroup, flags.seed.unwrap_or(0), &mut report)?;
            report.all_must_hold();
        }
        "antipode" => {
            let chi = antipode(&cogroup);
            report.table = Some(table_rows(chi.format_table(&cogroup)));
        }
        "inverse" => {
            let nu = cogroup.inverse();
            let rows = a
                .positive_words_upto(d)
                .map(|w| TableRow {
                    word: a.format_word(w),
                    image: nu.apply_word(w).to_string(),
                })
                .collect();
            report.table = Some(rows);
        }
        "nu-eq-chi" => {
            let r = equivalence_report(&cogroup, d);
            report.verdict("nu_eq_chi", r.nu_eq_chi);
            if !r.nu_eq_chi {
                report.witnesses.extend(r.witness);
            }
            report.all_must_hold();
        }
        "check-surjective" => {
            let chi = antipode(&cogroup);
            for (deg, ok) in is_antipode_surjective(&cogroup, &chi).into_iter().enumerate() {
                report.verdict(&format!("surjective_degree_{deg}"), ok);
            }
            let (ok, w) = indecomposables_check(&cogroup, &chi);
            report.verdict("minus_one_on_indecomposables", ok);
            if let Some(w) = w {
                report.witnesses.push(format!("chi({0}) + {0} has indecomposable terms", a.format_word(&w)));
            }
            report.all_must_hold();
        }
        "classify" => {
            let r = if coalgebra.is_trivial() {
                classify_module(&spec.module, d)?
            } else {
                equivalence_report(&cogroup, d)
            };
            report.verdict("nu_eq_chi", r.nu_eq_chi);
            report.verdict("chi_is_morphism", r.chi_is_morphism);
            report.verdict("graded_commutative", r.graded_commutative);
            report.verdict("module_in_s", r.module_in_s);
            report.verdicts.push(Verdict {
                name: "module_in_f".to_string(),
                value: r.module_in_f,
            });
            if let Some(c) = r.closed_form {
                report.verdict("closed_form", c);
            }
            report.verdict("consistent", r.consistent);
            report.witnesses.extend(r.witness);
            if !r.consistent {
                report.exit_code = 1;
            }
        }
        _ => unreachable!("command list checked above"),
    }
    Ok(report)
}

fn table_rows(rows: Vec<(String, String)>) -> Vec<TableRow> {
    rows.into_iter().map(|(word, image)| TableRow { word, image }).collect()
}

/// Degree bound for the randomized group-law check in `check-hopf`.
pub const SPOT_CHECK_DEGREE: usize = 6;

/// Group laws of G(A, A) on three seeded random elements, up to
/// [`SPOT_CHECK_DEGREE`].
fn spot_check_group_laws(cogroup: &Cogroup, seed: u64, report: &mut Report) -> Result<()> {
    let a = cogroup.algebra();
    let d = a.truncation().min(SPOT_CHECK_DEGREE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c: &dyn GradedCoalgebra = cogroup;
    let f = random_element(c, a, d, &mut rng)?;
    let g = random_element(c, a, d, &mut rng)?;
    let h = random_element(c, a, d, &mut rng)?;
    let e = GradedMap::unit(c, a, d)?;
    let assoc = convolve(c, &convolve(c, &f, &g)?, &h)? == convolve(c, &f, &convolve(c, &g, &h)?)?;
    let unit = convolve(c, &f, &e)? == f && convolve(c, &e, &f)? == f;
    let inv = convolution_inverse(c, &f)?;
    let two_sided = convolve(c, &f, &inv)? == e && convolve(c, &inv, &f)? == e;
    let agree = left_convolution_inverse(c, &f)? == inv;
    report.verdict("convolution_associative", assoc);
    report.verdict("convolution_unit", unit);
    report.verdict("convolution_inverse_two_sided", two_sided);
    report.verdict("left_right_inverse_agree", agree);
    Ok(())
}

/// Parses `<command> <file|-> [--max-degree D] [--json] [--seed N]`.
pub fn parse_args(args: &[String]) -> std::result::Result<(String, String, Flags), String> {
    let mut positional = Vec::new();
    let mut flags = Flags::default();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--json" => flags.json = true,
            "--max-degree" => {
                let v = it.next().ok_or("--max-degree needs a value")?;
                flags.max_degree = Some(v.parse().map_err(|_| format!("invalid --max-degree: {v}"))?);
            }
            "--seed" => {
                let v = it.next().ok_or("--seed needs a value")?;
                flags.seed = Some(v.parse().map_err(|_| format!("invalid --seed: {v}"))?);
            }
            s if s.starts_with("--") => return Err(format!("unknown flag: {s}")),
            _ => positional.push(a.clone()),
        }
    }
    match <[String; 2]>::try_from(positional) {
        Ok([command, input]) => Ok((command, input, flags)),
        Err(_) => Err(usage()),
    }
}

pub fn usage() -> String {
    format!(
        "usage: cogroup <command> <file|-> [--max-degree D] [--json] [--seed N]\ncommands: {}",
        COMMANDS.join(", ")
    )
}

/// Full command-line behavior; returns the process exit code.
pub fn main_with_args(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (command, input, flags) = match parse_args(args) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(stderr, "{msg}");
            return 2;
        }
    };
    if !COMMANDS.contains(&command.as_str()) {
        let _ = writeln!(stderr, "error: unknown command '{command}'\n{}", usage());
        return 2;
    }
    let text = if input == "-" {
        let mut s = String::new();
        if let Err(e) = stdin.read_to_string(&mut s) {
            let _ = writeln!(stderr, "error: reading stdin: {e}");
            return 2;
        }
        s
    } else {
        match std::fs::read_to_string(&input) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(stderr, "error: {input}: {e}");
                return 2;
            }
        }
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: {input}: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let report = match run_command(&spec, &command, &flags) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let out = if flags.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    let _ = stdout.write_all(out.as_bytes());
    let _ = writeln!(stderr, "time: {:.3}s", start.elapsed().as_secs_f64());
    report.exit_code
}

pub mod algebra;
pub mod axioms;
pub mod classify;
pub mod cli;
pub mod coalgebra;
pub mod cogroup;
pub mod convolution;
pub mod error;
pub mod graded;
pub mod ring;

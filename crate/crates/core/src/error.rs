use thiserror::Error;

use crate::ring::RingSpec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Z/n requires n >= 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("annihilator {annihilator} is not legal over {ring}")]
    IllegalAnnihilator { ring: RingSpec, annihilator: u64 },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("base rings differ: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("maps have different sources, targets or truncations")]
    MapMismatch,
    #[error("image of `{generator}` is not homogeneous of degree {expected}")]
    DegreeMismatch { generator: String, expected: usize },
    #[error("image of `{generator}` is not killed by its annihilator {annihilator}")]
    AnnihilatorViolation { generator: String, annihilator: u64 },
    #[error("coproduct term {left}*{right} of `{generator}` has degree {got}, expected {expected}")]
    CoproductImbalance {
        generator: String,
        left: String,
        right: String,
        got: usize,
        expected: usize,
    },
    #[error("operation requires a field (Q or Fp), got {0}")]
    NotAField(RingSpec),
    #[error("coalgebra axioms fail: {0}")]
    CoalgebraAxioms(String),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("unknown command: {0}")]
    UnknownCommand(String),
}

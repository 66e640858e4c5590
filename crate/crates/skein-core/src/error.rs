//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkeinError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial has no separating exponent")]
    ZeroPolynomial,
    #[error("parse error at line {line}, col {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid braid word: {0}")]
    InvalidBraidWord(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("cell ({0},{1}) is not an extreme cell")]
    NotExtremeCell(usize, usize),
    #[error("diagram error: {0}")]
    Diagram(String),
    #[error("diagram has boundary endpoints; use the relative evaluator")]
    UnexpectedEndpoints,
    #[error("diagram is closed; expected one input and one output endpoint")]
    MissingEndpoints,
    #[error("element not supported on the expected keys: {0}")]
    BadSupport(String),
    #[error("winding mismatch: expected {expected}, got {got}")]
    WindingMismatch { expected: i64, got: i64 },
    #[error("change of basis is singular: {0}")]
    SingularBasisChange(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;

use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mismatched variable sets: {0} vs {1} variables")]
    MismatchedVariables(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exterior elements live on different sides")]
    MixedSides,

    #[error("Pfaffian of an odd number ({0}) of rows")]
    OddPfaffian(usize),

    #[error("variable {0} is not assigned")]
    MissingAssignment(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ideal or module is not homogeneous")]
    Inhomogeneous,

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("input is not a resolution: homology at position {position}")]
    NotAResolution { position: usize },

    #[error("resolution did not terminate within {max_len} steps")]
    Truncated { max_len: usize },

    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;

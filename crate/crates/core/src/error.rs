use thiserror::Error;

/// Errors produced by the solvers, file readers and instance builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller broke an operation's precondition (wrong dimension, bad index, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The brute-force oracle refuses instances with too many positive points.
    #[error("oracle refused: {positives} positive points exceed the limit of {limit}")]
    OracleLimit { positives: usize, limit: usize },

    #[error("construction failed: {0}")]
    Construction(String),

    /// A solution handed to the reduction decoder is not a maximal subset.
    #[error("solution is not maximal: dropping point {index} does not lower the weight")]
    NotMaximal { index: usize },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Contract(message.into()))
}

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("empty interval: {lower} is not below {upper}")]
    EmptyInterval { lower: String, upper: String },
    #[error("n = {n} exceeds the cap {cap} for {what}")]
    CapExceeded { what: String, n: usize, cap: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

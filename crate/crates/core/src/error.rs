use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Parameters outside the range where an operation is defined
    /// (for example codimension at most two for the Whitehead kernel).
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A broken internal invariant. Never swallowed.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("cache format error in {path}: {reason}")]
    CacheFormat { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistency(msg.into()))
}

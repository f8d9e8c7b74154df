use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("out of desk-scale range: {0}")]
    OutOfRange(String),

    #[error("invalid algebra specification: {0}")]
    InvalidSpec(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("malformed algorithm: {0}")]
    Malformed(String),

    #[error("construction impossible: {0}")]
    PointCountLimit(String),

    #[error("search space too large: about {estimate} candidates (limit {limit})")]
    SearchSpaceTooLarge { estimate: u128, limit: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window too small: no element of the set lies in [{x}, {y_max}]")]
    WindowTooSmall { x: String, y_max: u64 },

    #[error("no applicable method: {0}")]
    NoApplicableMethod(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

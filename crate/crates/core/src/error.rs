use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {0} exceeds the supported cap of 2^20")]
    FieldTooLarge(u64),
    #[error("{value} is not an element of GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("fields differ")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("expected a matrix of rank {expected}, found rank {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("invalid pivot vector: {0}")]
    InvalidPivot(String),
    #[error("pivot code has minimum distance {found}, at least {required} is required")]
    PivotDistance { found: usize, required: usize },
    #[error("level {pivot} is not a valid {delta}-space: {reason}")]
    InvalidLevel {
        pivot: String,
        delta: usize,
        reason: String,
    },
    #[error("{what} ({size}) exceeds the cap of {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, size: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size,
            cap,
        }
    }
}

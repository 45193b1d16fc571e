use thiserror::Error;

/// Errors shared by the geometric and combinatorial kernels.
///
/// Exact witnesses (points, bounds) are rendered into the message so that a
/// failed precondition can always be replayed by hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero-dimensional ambient space rejected")]
    ZeroDimension,

    #[error("empty polyhedron")]
    EmptyPolyhedron,

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("{0} is not a subset of the ground set")]
    NotSubset(String),

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("enumeration cap exceeded: {size} points > cap {cap}; use the randomized lower-bound mode")]
    CapExceeded { size: usize, cap: usize },

    #[error("precondition violated: {condition}{}", witness.as_ref().map(|w| format!(" (witness {w})")).unwrap_or_default())]
    Precondition {
        condition: String,
        witness: Option<String>,
    },

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn precondition(condition: impl Into<String>) -> Self {
        Error::Precondition {
            condition: condition.into(),
            witness: None,
        }
    }

    pub fn precondition_with(condition: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Precondition {
            condition: condition.into(),
            witness: Some(witness.into()),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

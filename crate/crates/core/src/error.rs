use thiserror::Error;

/// Errors produced by constructions and the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,

    #[error("point set is empty")]
    EmptyInput,

    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),

    #[error("degenerate triple: two of the three points coincide")]
    DegenerateTriple,

    #[error("point set is not acute ({violations} violating triples)")]
    NotAcute { violations: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("retry budget of {budget} exhausted while extending from dimension {dim}")]
    RetryExhausted { dim: usize, budget: u32 },

    #[error("constructed set of {size} points in R^{dim} exceeds the 2^d - 1 bound; this is a bug")]
    UpperBoundViolated { dim: usize, size: usize },

    #[error("dimension {0} too large for exhaustive subset scan (max 4)")]
    DimensionTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

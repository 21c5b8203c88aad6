use thiserror::Error;

/// Errors raised by lattice arithmetic, the cohomology oracle and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient {value} is outside the supported range |c| <= {bound}")]
    Bounds { value: i128, bound: i64 },

    #[error("reflection indices must be distinct and in 1..=6, got ({0}, {1}, {2})")]
    Index(usize, usize, usize),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("search budget exceeded: degree {degree} is above the limit {limit}")]
    Budget { degree: i64, limit: i64 },

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

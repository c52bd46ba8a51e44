use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree precondition violated: {0}")]
    Degree(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("geometry: {0}")]
    Geometry(String),
    #[error("grid: {0}")]
    Grid(String),
}

impl Error {
    /// True for failures that a retry at higher precision may resolve.
    pub fn is_precision(&self) -> bool {
        matches!(self, Error::PrecisionExhausted(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

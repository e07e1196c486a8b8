use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain where a value is exactly representable.
    #[error("domain error: {0}")]
    Domain(String),
    /// Parameters for which a closed form collapses (p = 0).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// Mismatched or malformed arguments.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

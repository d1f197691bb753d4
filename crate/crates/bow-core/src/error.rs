use thiserror::Error;

/// Errors surfaced by the numeric kernels and game solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Result would exceed the double-precision range.
    #[error("overflow: {0}")]
    Overflow(String),
    /// A denominator or scale collapsed below representable size.
    #[error("degenerate: {0}")]
    Degenerate(String),
    /// Problem size beyond the supported limit.
    #[error("too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("indeterminate form: {0}")]
    Indeterminate(String),

    #[error("pole: {0}")]
    Pole(String),

    /// A series did not reach the requested accuracy. The partial result is
    /// kept so callers can report it.
    #[error(
        "series did not converge after {terms_used} terms (partial value {value:e}, error estimate {abs_error_estimate:e})"
    )]
    NonConvergence { value: f64, abs_error_estimate: f64, terms_used: usize },

    #[error("singularity: {0}")]
    Singular(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("series order {have} is too small, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("insufficient grid: {0}")]
    InsufficientGrid(String),

    #[error("identity check failed: {0}")]
    IdentityMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

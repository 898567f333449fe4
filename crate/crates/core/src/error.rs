use thiserror::Error;

/// Errors raised by the physics and numerics routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A function evaluated to NaN or infinity where a finite value was needed.
    #[error("numeric error: non-finite value {value} at x = {at}")]
    NonFinite { at: f64, value: f64 },

    /// An iterative method hit its iteration cap.
    #[error("numeric error: no convergence for index {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },

    /// Fewer roots than requested were found inside the largest scan window.
    #[error("numeric error: found {found} of {requested} roots below xi = {window}")]
    MissingRoots {
        found: usize,
        requested: usize,
        window: f64,
    },

    /// A malformed constants file.
    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects non-finite or non-positive inputs with a domain error naming `what`.
pub(crate) fn require_positive(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(format!(
            "{what} must be finite and > 0, got {value}"
        )))
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters outside the admissible range of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration that cannot be brought to convergence.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// A truncated series whose guaranteed tail bound missed the requested tolerance.
    /// The partial sum and the achieved bound are kept so callers can still use them.
    #[error("tolerance {requested:e} not reached: achieved bound {achieved:e} after {terms} terms")]
    Tolerance {
        requested: f64,
        achieved: f64,
        terms: usize,
        value: (f64, f64),
    },

    /// Quadrature not exact for the requested integrand degree.
    #[error("insufficient quadrature: {0}")]
    Precision(String),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// Short machine-readable label, used in report rows.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain-error",
            Error::Convergence(_) => "convergence-error",
            Error::Tolerance { .. } => "tolerance-error",
            Error::Precision(_) => "precision-error",
            Error::Grid(_) => "grid-error",
            Error::Resource(_) => "resource-error",
            Error::Parse(_) => "parse-error",
        }
    }
}

use thiserror::Error;

/// Errors raised by kernel evaluation, the classifiers and the parsers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("power series did not converge within {max_terms} terms")]
    SeriesNonConvergence { max_terms: usize },

    #[error("quadrature did not converge after {levels} refinement levels")]
    QuadratureNonConvergence { levels: usize },

    #[error("pole: 1 + Bz vanishes at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    #[error("target boundary polygon self-intersects (segments {first} and {second}); is q univalent?")]
    PolygonDegenerate { first: usize, second: usize },

    #[error("identity check failed: {0}")]
    IdentityViolation(String),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures of an iterative numerical method, as opposed to bad input.
    pub fn is_non_convergence(&self) -> bool {
        matches!(
            self,
            Error::SeriesNonConvergence { .. } | Error::QuadratureNonConvergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

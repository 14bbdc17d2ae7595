use thiserror::Error;

use crate::ComplexValue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial degree {found:?} is below the required minimum {min}")]
    DegreeTooLow { found: Option<usize>, min: usize },
    #[error("expected a polynomial of degree {expected}, found {found:?}")]
    DegreeMismatch { expected: usize, found: Option<usize> },
    #[error("degree {0} has no resolvent closed form; try de Moivre or reciprocal detection, or the numeric oracle")]
    DegreeUnsupported(usize),
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("palindromic polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("half-degree {n} exceeds the configured bound {max}")]
    SizeBound { n: usize, max: usize },
    #[error("quadratic factors repeat (alpha values {0} and {1} coincide)")]
    RepeatedFactor(ComplexValue, ComplexValue),
    #[error("alpha = {0} lies on the boundary |alpha| = 2")]
    BoundaryAlpha(ComplexValue),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("numeric root finder did not meet its residual bound (worst residual {worst_residual:e})")]
    NonConvergence {
        roots: Vec<ComplexValue>,
        residuals: Vec<f64>,
        worst_residual: f64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

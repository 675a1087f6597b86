use thiserror::Error;

use crate::scalar::RadicalSum;

/// Errors raised while building or combining operators.
#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("radicand {radicand} evaluates to {value} < 0 at nu = {nu}")]
    NegativeRadicand {
        radicand: String,
        nu: f64,
        value: f64,
    },
    #[error("radicand {0} has non-real coefficients")]
    NonRealRadicand(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operands act on different bases")]
    BasisMismatch,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("invalid dimension {dim}: at least {min} required")]
    InvalidDimension { dim: usize, min: usize },
    #[error("invalid spin: 2j = {0} (need 2j >= 1)")]
    InvalidSpin(u32),
    #[error("two-mode space {d1}x{d2} too small for 2j = {two_j}")]
    DimensionTooSmall { d1: usize, d2: usize, two_j: u32 },
    #[error("operator {0} leaves the spin block")]
    NonInvariantSubspace(String),
    #[error("Holstein-Primakoff construction not closed for odd 2j = {two_j}: J- maps |2j> out with amplitude {leakage}")]
    OddTwoJNotClosed { two_j: u32, leakage: RadicalSum },
    #[error("inconsistent closed form: {0}")]
    InconsistentClosedForm(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("invalid nu = {0}: numeric evaluation requires nu > -1/2")]
    InvalidNu(f64),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

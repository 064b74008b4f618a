use thiserror::Error;

use crate::algnum::Alg;

/// A zero divisor was met in level `level` of a tower: its defining
/// polynomial factors as the product of `factors` (each monic, with
/// coefficients in the levels below).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitInfo {
    pub level: usize,
    pub factors: Vec<Vec<Alg>>,
}

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    /// Dynamic evaluation discovered a reducible defining polynomial. Callers
    /// holding the tower re-run their computation once per branch.
    #[error("tower split at level {}", .0.level)]
    Split(SplitInfo),
    #[error("defining polynomial is constant")]
    ConstantPolynomial,
    #[error("element depends on a free parameter and cannot be inverted")]
    ParameterInverse,
    #[error("degenerate equation")]
    DegenerateEquation,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

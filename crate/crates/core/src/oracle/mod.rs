//! Independent checks: residual orders, a brute-force coefficient solver
//! and high-precision numeric evaluation.

mod brute;
pub mod numeric;
mod residual;
mod verify;

use crate::algnum::Tower;
use crate::series::PuiseuxTruncation;
pub use brute::{brute_force_solutions, BruteSolution};
pub use numeric::{numeric_check, Cx, NumericReport};
pub use residual::{chart_derivative, residual, residual_order, ResidualReport};
pub use verify::{chart, residual_consistent, solution_residual};

/// One conjugate of a truncation: ramification, precision and the
/// coefficient of every `x^(j/n)`, `j` from `low`.
#[derive(Clone, Debug)]
pub struct NumericTruncation {
    pub n: u32,
    pub low: i64,
    pub known: Option<i64>,
    pub coeffs: Vec<Cx>,
}

impl NumericTruncation {
    /// Equal shape and coefficients within `2^-tol_bits`.
    pub fn close_to(&self, other: &NumericTruncation, tol_bits: i64) -> bool {
        if self.n != other.n || self.known != other.known {
            return false;
        }
        let lo = self.low.min(other.low);
        let hi = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        (lo..hi).all(|j| {
            let a = self.at(j);
            let b = other.at(j);
            match (a, b) {
                (None, None) => true,
                (Some(a), None) | (None, Some(a)) => a.log2_abs().is_none_or(|e| e < -tol_bits),
                (Some(a), Some(b)) => a.sub(b).log2_abs().is_none_or(|e| e < -tol_bits),
            }
        })
    }

    fn at(&self, j: i64) -> Option<&Cx> {
        let i = j - self.low;
        (i >= 0).then(|| self.coeffs.get(i as usize)).flatten()
    }
}

/// Every conjugate of `s` under the complex embeddings of `tw`, with the
/// free parameters set to `params`. Duplicates are removed.
pub fn expand_numeric(s: &PuiseuxTruncation, tw: &Tower, params: &[Cx], p: usize) -> Vec<NumericTruncation> {
    let mut out: Vec<NumericTruncation> = Vec::new();
    for e in numeric::embeddings(tw, p) {
        let coeffs = (s.low()..=s.high()).map(|j| numeric::eval_alg(&s.coeff(j), &e, params, p)).collect();
        let t = NumericTruncation { n: s.ram_index(), low: s.low(), known: s.known_order(), coeffs };
        if !out.iter().any(|o| o.close_to(&t, p as i64 / 2)) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests;

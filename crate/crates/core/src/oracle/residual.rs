//! Direct substitution of a truncation into `F(y, sign x^h y')`.

use crate::algnum::{Alg, Tower};
use crate::error::Result;
use crate::poly::BivPoly;
use crate::series::{substitute_into, Order, PuiseuxTruncation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub residual_order: Order,
    /// Number of coefficients of `y` that entered the computation.
    pub evaluated_terms: usize,
}

/// `sign x^h y'` as a truncation.
pub fn chart_derivative(tw: &Tower, y: &PuiseuxTruncation, h: i64, sign: i64) -> PuiseuxTruncation {
    let d = y.derivative().shift(h * y.ram_index() as i64);
    d.scale(tw, &Alg::from_int(sign))
}

/// `ord_x F(y, sign x^h y')`, with the precision of `y` propagated.
pub fn residual_order(tw: &Tower, f: &BivPoly, y: &PuiseuxTruncation, h: i64, sign: i64) -> Result<ResidualReport> {
    let r = residual(tw, f, y, h, sign)?;
    Ok(ResidualReport { residual_order: r.order(tw)?, evaluated_terms: y.terms().count() })
}

/// The residual series itself, normalized.
pub fn residual(tw: &Tower, f: &BivPoly, y: &PuiseuxTruncation, h: i64, sign: i64) -> Result<PuiseuxTruncation> {
    let p = chart_derivative(tw, y, h, sign);
    substitute_into(tw, f, y, &p).normalize(tw)
}

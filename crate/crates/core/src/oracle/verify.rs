//! Residual checks for solver outputs.

use crate::error::Result;
use crate::poly::BivPoly;
use crate::series::Order;
use crate::solver::{SolutionKind, SolutionTruncation};

use super::residual::residual_order;

/// The chart `(h, sign)` a solution's series lives in.
pub fn chart(s: &SolutionTruncation) -> (i64, i64) {
    if s.at_infinity {
        (2, -1)
    } else {
        (0, 1)
    }
}

/// Residual order of `s` in its own chart; `None` for the generic family,
/// whose center is symbolic.
pub fn solution_residual(f: &BivPoly, s: &SolutionTruncation) -> Result<Option<Order>> {
    if s.kind == SolutionKind::GenericNonCritical {
        return Ok(None);
    }
    let (h, sign) = chart(s);
    Ok(Some(residual_order(&s.tower, f, &s.series, h, sign)?.residual_order))
}

/// No coefficient of the residual that the known terms determine survives.
pub fn residual_consistent(o: &Order) -> bool {
    !matches!(o, Order::Exact(_))
}

//! Work at one center: constants, places, reparametrizations.

use crate::algnum::{Alg, Tower};
use crate::briot::BriotKind;
use crate::error::Result;
use crate::places::{places_at_point, ramification_data, Place};
use crate::poly::{BivPoly, Coord, CurvePoint};
use crate::reparam::{reparametrize, ReparamProblem};
use crate::series::{compose, PuiseuxTruncation};

use super::types::{PlaceNote, PlaceVerdict, SolutionKind, SolutionTruncation};

/// Reads a series in `t` as a series in `x = t^n`.
fn in_x(s: &PuiseuxTruncation, n: u32) -> PuiseuxTruncation {
    let coeffs = (s.low()..=s.high()).map(|j| s.coeff(j)).collect();
    PuiseuxTruncation::new(n, s.low(), coeffs, s.known_order())
}

/// Whether `(k - r)/(1 - h)` is a positive integer, and that integer. For
/// `h >= 2` this only marks a candidate.
pub fn is_solution_place(pl: &Place, h: i64) -> (bool, Option<u32>) {
    let n = ramification_data(pl, h).positive_integer();
    (n.is_some(), n)
}

fn note(pl: &Place, h: i64, verdict: PlaceVerdict) -> PlaceNote {
    PlaceNote {
        center: pl.center.display(&pl.tower),
        place: format!("({}, {})", pl.a.display(&pl.tower, "t"), pl.b.truncate(pl.r + 4).display(&pl.tower, "t")),
        k: pl.k,
        r: pl.r,
        n: ramification_data(pl, h).n,
        verdict,
    }
}

/// The truncations `a(s_i(x^(1/n)))` of one place, to `x^(N/n)`.
pub fn solutions_from_place(pl: &Place, h: i64, sign: i64, n_terms: u32) -> Result<(Vec<SolutionTruncation>, PlaceNote)> {
    let Some(prob) = ReparamProblem::new(pl, h, sign) else {
        return Ok((vec![], note(pl, h, PlaceVerdict::RejectedOrder)));
    };
    let mut out = Vec::new();
    for sol in reparametrize(&prob, n_terms)? {
        let kind = match &sol.kind {
            BriotKind::Empty => continue,
            BriotKind::Unique => SolutionKind::Determined,
            BriotKind::Family { .. } => SolutionKind::Family(sol.tower.params().to_vec()),
        };
        let tw = &sol.tower;
        let y = compose(tw, &pl.a, &sol.s)?.truncate(n_terms as i64 + 1);
        let series = in_x(&y, prob.n).reduce_ramification(tw)?;
        out.push(SolutionTruncation {
            center: CurvePoint::new(Coord::Finite(tw.reduce(pl.y0())), pl.center.p0.clone()),
            kind,
            ramification: series.ram_index(),
            series,
            tower: sol.tower.clone(),
            guaranteed_terms: n_terms,
            at_infinity: h >= 2,
            relation: None,
        });
    }
    let verdict = if out.is_empty() { PlaceVerdict::RejectedSolvability } else { PlaceVerdict::Accepted { outputs: out.len() } };
    Ok((out, note(pl, h, verdict)))
}

pub fn constant(tw: &Tower, y0: &Alg, at_infinity: bool) -> SolutionTruncation {
    let y0 = tw.reduce(y0);
    SolutionTruncation {
        center: CurvePoint::finite(y0.clone(), Alg::zero()),
        kind: SolutionKind::Constant,
        ramification: 1,
        series: PuiseuxTruncation::constant(y0),
        tower: tw.clone(),
        guaranteed_terms: 0,
        at_infinity,
        relation: None,
    }
}

/// Every solution with initial tuple `center` (finite `y0`) of
/// `F(y, x^h y') = 0`, the constant included when `p0 = 0`.
pub fn solve_center(
    tw: &Tower,
    f: &BivPoly,
    center: &CurvePoint,
    h: i64,
    sign: i64,
    n_terms: u32,
) -> Result<(Vec<SolutionTruncation>, Vec<PlaceNote>)> {
    let found = tw.branch(&|tw: &Tower| {
        let mut sols = Vec::new();
        let mut notes = Vec::new();
        if let Coord::Finite(p0) = &center.p0 {
            if tw.is_zero(p0)? {
                sols.push(constant(tw, center.y0.finite().unwrap(), h >= 2));
            }
        }
        // a short expansion settles the order test; expand fully only if needed
        let probe = places_at_point(tw, f, center, 1)?;
        let full = probe.iter().any(|pl| ReparamProblem::new(pl, h, sign).is_some());
        let places = if full { places_at_point(tw, f, center, n_terms as i64 + 1)? } else { probe };
        for pl in places {
            let (s, n) = solutions_from_place(&pl, h, sign, n_terms)?;
            sols.extend(s);
            notes.push(n);
        }
        Ok(vec![(sols, notes)])
    })?;
    let mut sols = Vec::new();
    let mut notes = Vec::new();
    for (s, n) in found {
        sols.extend(s);
        notes.extend(n);
    }
    sols.sort_by_key(|s| (s.kind.rank(), s.ramification));
    Ok((sols, notes))
}

//! Solution truncations of `F(y, y') = 0` around a finite point and at
//! infinity.

mod center;
mod types;

use crate::algnum::{Alg, Rational, Tower};
use crate::error::{Error, Result};
use crate::places::{places_at_point, transform_infinity, Place};
use crate::poly::{critical_points, squarefree_part, strip_content, BivPoly, Coord, ContentReport, CurvePoint};
use crate::series::PuiseuxTruncation;
pub use center::{constant, is_solution_place, solutions_from_place, solve_center};
pub use types::{PlaceNote, PlaceVerdict, SolutionKind, SolutionTruncation, SolveReport};

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Overrides the default truncation bound.
    pub terms: Option<u32>,
}

/// Content stripping followed by the squarefree part.
pub fn prepare(f: &BivPoly) -> Result<(BivPoly, ContentReport)> {
    let (g, report) = strip_content(f)?;
    let (g, _) = strip_content(&squarefree_part(&g)?)?;
    Ok((g, report))
}

/// `2 (deg_p - 1) deg_y + 1`.
pub fn truncation_bound(f: &BivPoly) -> u32 {
    2 * f.deg_p().saturating_sub(1) * f.deg_y() + 1
}

/// The bound used at infinity, at least `deg_y + 1`.
pub fn truncation_bound_infinity(f: &BivPoly) -> u32 {
    truncation_bound(f).max(f.deg_y() + 1)
}

fn coeffs_in(f: &BivPoly, p_slot: bool) -> Vec<Alg> {
    let d = if p_slot { f.deg_p() } else { f.deg_y() };
    (0..=d).map(|e| if p_slot { f.coeff(0, e) } else { f.coeff(e, 0) }).collect()
}

/// `y0 + p0 x + O(x^2)` over the curve `relation`, with `y0, p0` symbolic.
fn generic(relation: &BivPoly) -> SolutionTruncation {
    let (tw, y0) = Tower::rationals().with_param("y0");
    let (tw, p0) = tw.with_param("p0");
    SolutionTruncation {
        center: CurvePoint::finite(y0.clone(), p0.clone()),
        kind: SolutionKind::GenericNonCritical,
        ramification: 1,
        series: PuiseuxTruncation::new(1, 0, vec![y0, p0], Some(2)),
        tower: tw,
        guaranteed_terms: 1,
        at_infinity: false,
        relation: Some(relation.clone()),
    }
}

/// Constant solutions `y = alpha` from factors `y - alpha` of the input.
fn content_constants(report: &ContentReport, at_infinity: bool) -> Result<Vec<SolutionTruncation>> {
    let mut out = Vec::new();
    for fac in &report.y_factors {
        let c = coeffs_in(fac, false);
        out.extend(Tower::rationals().with_roots(&c, "y0", &|tw: &Tower, a: &Alg| Ok(vec![constant(tw, a, at_infinity)]))?);
    }
    Ok(out)
}

/// Solutions with initial tuple `(∞, ∞)`: `1/y~` for the solutions `y~`
/// centered at the origin of the transformed curve.
fn solve_infinite_center(f: &BivPoly, terms: Option<u32>) -> Result<(Vec<SolutionTruncation>, Vec<PlaceNote>)> {
    let g = transform_infinity(f, 0)?;
    let tw = Tower::rationals();
    let origin = CurvePoint::finite(Alg::zero(), Alg::zero());
    if !origin.is_on_curve(&tw, &g)? {
        return Ok((vec![], vec![]));
    }
    let n = terms.unwrap_or_else(|| truncation_bound(&g));
    let (sols, mut notes) = solve_center(&tw, &g, &origin, 0, 1, n)?;
    for nt in &mut notes {
        nt.center = format!("(∞, ∞) as {} of 1/y", nt.center);
    }
    let mut out = Vec::new();
    for s in sols.into_iter().filter(|s| s.kind != SolutionKind::Constant) {
        let series = s.series.recip(&s.tower, n as i64 + 1)?;
        out.push(SolutionTruncation { center: CurvePoint::new(Coord::Infinity, Coord::Infinity), series, ..s });
    }
    Ok((out, notes))
}

/// All solution truncations around a finite point: the generic family,
/// constants, and the truncations at every critical center.
pub fn puiseux_solve(f: &BivPoly, opts: &SolveOptions) -> Result<SolveReport> {
    let (g, report) = prepare(f)?;
    let n = opts.terms.unwrap_or_else(|| truncation_bound(&g));
    let mut solutions = vec![generic(&g)];
    solutions.extend(report.p_factors.iter().map(generic));
    solutions.extend(content_constants(&report, false)?);
    let mut notes = Vec::new();
    let crit = critical_points(&g)?;
    for cp in &crit.points {
        let (s, nt) = solve_center(&cp.tower, &g, &cp.point, 0, 1, n)?;
        solutions.extend(s);
        notes.extend(nt);
    }
    if crit.infinity_infinity {
        let (s, nt) = solve_infinite_center(&g, opts.terms)?;
        solutions.extend(s);
        notes.extend(nt);
    }
    Ok(SolveReport { equation: g, truncation_bound: n, solutions, notes })
}

/// The solutions with initial tuple `point`, whose coordinates live in `tw`.
pub fn puiseux_solve_at(tw: &Tower, f: &BivPoly, point: &CurvePoint, opts: &SolveOptions) -> Result<SolveReport> {
    let (g, report) = prepare(f)?;
    let n = opts.terms.unwrap_or_else(|| truncation_bound(&g));
    let mut solutions = Vec::new();
    let mut notes = Vec::new();
    let y0 = match &point.y0 {
        Coord::Infinity if point.p0.is_infinite() => {
            let (s, nt) = solve_infinite_center(&g, opts.terms)?;
            return Ok(SolveReport { equation: g, truncation_bound: n, solutions: s, notes: nt });
        }
        Coord::Infinity => return Err(Error::Precondition("y0 = ∞ requires p0 = ∞".into())),
        Coord::Finite(y0) => y0.clone(),
    };
    let p0_zero = match &point.p0 {
        Coord::Finite(p0) => tw.is_zero(p0)?,
        Coord::Infinity => false,
    };
    let on_content = |fac: &BivPoly, v: &Alg, p_slot: bool| -> Result<bool> {
        let c = coeffs_in(fac, p_slot);
        tw.is_zero(&crate::algnum::upoly::eval(tw, &c, v))
    };
    let mut constant_done = false;
    if p0_zero {
        for fac in &report.y_factors {
            if on_content(fac, &y0, false)? {
                solutions.push(constant(tw, &y0, false));
                constant_done = true;
            }
        }
    }
    if let Coord::Finite(p0) = &point.p0 {
        for fac in &report.p_factors {
            if on_content(fac, p0, true)? {
                solutions.push(regular(tw, &y0, p0, n));
            }
        }
    }
    if point.is_on_curve(tw, &g)? {
        let critical = match &point.p0 {
            Coord::Infinity => true,
            Coord::Finite(p0) => p0_zero || tw.is_zero(&g.derivative_p().evaluate(tw, &y0, p0))?,
        };
        if critical {
            let (s, nt) = solve_center(tw, &g, point, 0, 1, n)?;
            solutions.extend(s.into_iter().filter(|s| !(constant_done && s.kind == SolutionKind::Constant)));
            notes.extend(nt);
        } else if let Coord::Finite(p0) = &point.p0 {
            solutions.push(regular(tw, &y0, p0, n));
        }
    } else if solutions.is_empty() {
        return Err(Error::NotOnCurve);
    }
    Ok(SolveReport { equation: g, truncation_bound: n, solutions, notes })
}

/// `y0 + p0 x` at a regular point.
fn regular(tw: &Tower, y0: &Alg, p0: &Alg, n: u32) -> SolutionTruncation {
    SolutionTruncation {
        center: CurvePoint::finite(tw.reduce(y0), tw.reduce(p0)),
        kind: SolutionKind::GenericNonCritical,
        ramification: 1,
        series: PuiseuxTruncation::new(1, 0, vec![tw.reduce(y0), tw.reduce(p0)], Some(2)),
        tower: tw.clone(),
        guaranteed_terms: n.min(1),
        at_infinity: false,
        relation: None,
    }
}

/// Solution truncations in powers of `1/x`: constants and the solutions
/// from places at `(y0, 0)` of `F(y, -x^2 y') = 0` in the chart `1/x`.
/// Truncations agreeing in every computed coefficient are reported once.
pub fn puiseux_solve_infinity(f: &BivPoly, opts: &SolveOptions) -> Result<SolveReport> {
    let (g, report) = prepare(f)?;
    let n = opts.terms.unwrap_or_else(|| truncation_bound_infinity(&g));
    let mut solutions = content_constants(&report, true)?;
    let mut notes = Vec::new();
    let base = coeffs_in(&g, false);
    let found = Tower::rationals().with_roots(&base, "y0", &|tw: &Tower, y0: &Alg| {
        Ok(vec![solve_center(tw, &g, &CurvePoint::finite(y0.clone(), Alg::zero()), 2, -1, n)?])
    })?;
    let mut seen: Vec<String> = Vec::new();
    for (sols, nt) in found {
        notes.extend(nt);
        for s in sols {
            let key = format!("{} | {:?} | {}", s.display_series(), s.tower_lines(), s.display_center());
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            solutions.push(s);
        }
    }
    Ok(SolveReport { equation: g, truncation_bound: n, solutions, notes })
}

/// Number of distinct places a symbolic place stands for over one
/// embedding of the first `base_depth` levels: embeddings of the remaining
/// levels are grouped when their expansions differ by `t -> w t`, `w^k = 1`.
pub fn conjugate_count(pl: &Place, base_depth: usize) -> u32 {
    use crate::oracle::numeric::{embeddings, eval_alg, poly_roots, Cx};
    const BITS: usize = 160;
    const TOL: i64 = -100;
    let embs = embeddings(&pl.tower, BITS);
    let close = |a: &Cx, b: &Cx| a.sub(b).log2_abs().is_none_or(|e| e < TOL);
    let base = &embs[0][..base_depth];
    let over: Vec<&Vec<Cx>> = embs.iter().filter(|e| e[..base_depth].iter().zip(base).all(|(a, b)| close(a, b))).collect();
    let top = pl.b.known_order().unwrap_or(pl.b.high() + 1);
    let range: Vec<i64> = (pl.b.low()..top).collect();
    let vecs: Vec<Vec<Cx>> = over.iter().map(|e| range.iter().map(|&j| eval_alg(&pl.b.coeff(j), e, &[], BITS)).collect()).collect();
    let mut unity = vec![Cx::from_rational(&Rational::from_integer((-1).into()), BITS)];
    unity.resize(pl.k as usize, Cx::zero(BITS));
    unity.push(Cx::from_rational(&Rational::from_integer(1.into()), BITS));
    let ws = poly_roots(&unity, BITS);
    let twisted = |u: &[Cx], v: &[Cx]| {
        ws.iter().any(|w| range.iter().zip(u.iter().zip(v)).all(|(&j, (a, b))| close(&a.mul(&w.pow(j.rem_euclid(pl.k as i64) as u32)), b)))
    };
    let mut reps: Vec<&Vec<Cx>> = Vec::new();
    for v in &vecs {
        if !reps.iter().any(|r| twisted(r, v)) {
            reps.push(v);
        }
    }
    reps.len() as u32
}

/// The points `(y0, p0)` of the curve above `y0`, `p0 = ∞` included.
pub fn fiber_centers(tw: &Tower, f: &BivPoly, y0: &Alg) -> Result<Vec<(Tower, CurvePoint)>> {
    let fib = f.eval_y(tw, y0);
    let trimmed = crate::algnum::upoly::trim(tw, &fib)?;
    let mut centers: Vec<(Tower, CurvePoint)> = tw.with_roots(&trimmed, "p0", &|tw: &Tower, p0: &Alg| {
        Ok(vec![(tw.clone(), CurvePoint::finite(tw.reduce(y0), p0.clone()))])
    })?;
    if trimmed.len() < fib.len() {
        centers.push((tw.clone(), CurvePoint::new(Coord::Finite(y0.clone()), Coord::Infinity)));
    }
    Ok(centers)
}

/// Sum of the ramification indices of the solution places (h = 0) over the
/// fiber `y = y0`, counted with conjugates.
pub fn solution_count_bound(tw: &Tower, f: &BivPoly, y0: &Alg) -> Result<u32> {
    let (g, _) = prepare(f)?;
    let mut total = 0;
    for (ctw, c) in fiber_centers(tw, &g, y0)? {
        for pl in places_at_point(&ctw, &g, &c, 2)? {
            if let (true, Some(n)) = is_solution_place(&pl, 0) {
                total += n * conjugate_count(&pl, tw.depth());
            }
        }
    }
    Ok(total)
}

/// Sum of `k` over every place above `y0`, counted with conjugates. For a
/// squarefree curve this is `deg_p`.
pub fn place_degree_sum(tw: &Tower, f: &BivPoly, y0: &Alg) -> Result<u32> {
    let (g, _) = prepare(f)?;
    let mut total = 0;
    for (ctw, c) in fiber_centers(tw, &g, y0)? {
        for pl in places_at_point(&ctw, &g, &c, 2)? {
            total += pl.k * conjugate_count(&pl, tw.depth());
        }
    }
    Ok(total)
}

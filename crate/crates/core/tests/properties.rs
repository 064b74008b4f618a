//! Randomized invariants of the solver on small equations through the
//! origin, checked against the independent oracles.

mod common;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use puiseux_core::algnum::{Alg, Tower};
use puiseux_core::oracle::{brute_force_solutions, residual_consistent, solution_residual};
use puiseux_core::poly::{BivPoly, Coord, CurvePoint};
use puiseux_core::series::Order;
use puiseux_core::solver::{fiber_centers, place_degree_sum, prepare, puiseux_solve_at, PlaceVerdict, SolutionKind, SolveOptions, SolveReport};

use common::*;

const TERMS: u32 = 5;
const MAX_RAM: u32 = 3;

fn config() -> Config {
    Config { cases: 96, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

/// `F` with `F(0, 0) = 0`, degree at most 2 in `y` and 3 in `p`.
fn equation() -> impl Strategy<Value = BivPoly> {
    let support: Vec<(u32, u32)> = (0..=2).flat_map(|i| (0..=3).map(move |j| (i, j))).filter(|&m| m != (0, 0)).collect();
    prop::collection::vec(-2i64..=2, support.len()).prop_map(move |cs| {
        let terms: Vec<(u32, u32, i64)> = support.iter().zip(cs).map(|(&(i, j), c)| (i, j, c)).collect();
        BivPoly::from_ints(&terms)
    })
}

/// The prepared equation, when it still passes through the origin.
fn usable(f: &BivPoly) -> Option<BivPoly> {
    if f.deg_p() == 0 {
        return None;
    }
    let (g, _) = prepare(f).ok()?;
    let on_curve = g.deg_p() > 0 && g.coeff(0, 0).is_literal_zero();
    on_curve.then_some(g)
}

fn origin() -> CurvePoint {
    CurvePoint::finite(Alg::zero(), Alg::zero())
}

fn solve(g: &BivPoly, pt: &CurvePoint, tw: &Tower, terms: u32) -> SolveReport {
    puiseux_solve_at(tw, g, pt, &SolveOptions { terms: Some(terms) }).unwrap()
}

fn order_value(o: &Order) -> Option<puiseux_core::algnum::Rational> {
    match o {
        Order::Exact(q) | Order::AtLeast(q) => Some(q.clone()),
        Order::Infinite => None,
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn residual_vanishes_and_grows_with_terms(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        let tw = Tower::rationals();
        let a = solve(&g, &origin(), &tw, TERMS);
        let b = solve(&g, &origin(), &tw, 2 * TERMS);
        for s in &a.solutions {
            let Some(r1) = solution_residual(&a.equation, s).unwrap() else { continue };
            prop_assert!(residual_consistent(&r1), "{} has residual {}", s.display_series(), r1);
            let t = extension(s, &b);
            prop_assert!(t.is_some(), "{} is not extended at 2N", s.display_series());
            let r2 = solution_residual(&b.equation, t.unwrap()).unwrap().unwrap();
            let grows = match (order_value(&r1), order_value(&r2)) {
                (Some(x), Some(y)) => y > x,
                (_, None) => true,
                (None, Some(_)) => false,
            };
            prop_assert!(grows, "residual {} -> {}", r1, r2);
        }
    }

    #[test]
    fn outputs_are_determined(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        let tw = Tower::rationals();
        let a = solve(&g, &origin(), &tw, TERMS);
        let b = solve(&g, &origin(), &tw, 2 * TERMS);
        prop_assert_eq!(a.solutions.len(), b.solutions.len());
        for s in &a.solutions {
            prop_assert!(extension(s, &b).is_some(), "{} changed at 2N", s.display_series());
        }
    }

    #[test]
    fn solution_places_yield_n_outputs(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        let a = solve(&g, &origin(), &Tower::rationals(), TERMS);
        for n in &a.notes {
            if let PlaceVerdict::Accepted { outputs } = &n.verdict {
                let want = n.n.as_ref().map(|n| n.to_integer());
                prop_assert_eq!(want, Some((*outputs as i64).into()), "{}", n.summary());
            }
        }
    }

    #[test]
    fn place_degrees_cover_the_fiber(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        prop_assert_eq!(place_degree_sum(&Tower::rationals(), &g, &Alg::zero()).unwrap(), g.deg_p());
    }

    #[test]
    fn solver_agrees_with_brute_force(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        let tw = Tower::rationals();
        let mut solver = Vec::new();
        for (ctw, pt) in fiber_centers(&tw, &g, &Alg::zero()).unwrap() {
            for s in solve(&g, &pt, &ctw, TERMS).solutions {
                if matches!(s.kind, SolutionKind::Family(_)) || !s.tower.params().is_empty() {
                    return Ok(());
                }
                if s.ramification <= MAX_RAM {
                    solver.extend(conjugates_of(&s.series, &s.tower));
                }
            }
        }
        let mut brute = Vec::new();
        for b in brute_force_solutions(&tw, &g, &Alg::zero(), 0, 1, MAX_RAM, TERMS).unwrap() {
            if !b.free.is_empty() {
                return Ok(());
            }
            brute.extend(conjugates_of(&b.series, &b.tower));
        }
        let (solver, brute) = (dedup(solver), dedup(brute));
        prop_assert!(covered(&solver, &brute), "a solver truncation is missing from brute force for {}", g.display_with(&tw));
        prop_assert!(covered(&brute, &solver), "a brute-force truncation is missing from the solver for {}", g.display_with(&tw));
    }

    #[test]
    fn regular_points_give_y0_plus_p0_x(a in 1i64..=3, b in -3i64..=3, c in 1i64..=3) {
        // p = a + b y + c y^2 through (0, a)
        let f = BivPoly::from_ints(&[(0, 1, 1), (0, 0, -a), (1, 0, -b), (2, 0, -c)]);
        let tw = Tower::rationals();
        let pt = CurvePoint::new(Coord::Finite(Alg::zero()), Coord::Finite(Alg::from_int(a)));
        let rep = solve(&f, &pt, &tw, TERMS);
        prop_assert_eq!(rep.solutions.len(), 1);
        let s = &rep.solutions[0];
        prop_assert!(s.kind == SolutionKind::GenericNonCritical);
        prop_assert!(s.series.coeff(0).is_literal_zero() && s.series.coeff(1) == Alg::from_int(a));
        let brute = brute_force_solutions(&tw, &f, &Alg::zero(), 0, 1, 1, TERMS).unwrap();
        prop_assert_eq!(brute.len(), 1);
        prop_assert!(brute[0].series.coeff(1) == Alg::from_int(a) && brute[0].series.coeff(2) == Alg::from_frac(a * b, 2));
    }

    #[test]
    fn outputs_are_pairwise_distinct(f in equation()) {
        let Some(g) = usable(&f) else { return Ok(()) };
        let a = solve(&g, &origin(), &Tower::rationals(), TERMS);
        let keys: Vec<String> = a.solutions.iter().map(|s| format!("{} {:?}", s.display_series(), s.tower_lines())).collect();
        for (i, k) in keys.iter().enumerate() {
            prop_assert!(!keys[..i].contains(k), "{} reported twice", k);
        }
    }

    #[test]
    fn every_point_has_a_solution(f in cubic(), y0 in -3i64..=3, d in 1i64..=3) {
        if f.deg_p() == 0 {
            return Ok(());
        }
        let Ok((g, _)) = prepare(&shift(&f, &Alg::from_frac(y0, d))) else { return Ok(()) };
        if g.deg_p() == 0 {
            return Ok(());
        }
        let tw = Tower::rationals();
        let mut found = 0;
        for (ctw, pt) in fiber_centers(&tw, &g, &Alg::zero()).unwrap() {
            found += solve(&g, &pt, &ctw, 3).solutions.len();
        }
        prop_assert!(found > 0, "nothing through y = {}/{} for {}", y0, d, f.display_with(&tw));
    }
}

/// Degree at most 3, small integer coefficients.
fn cubic() -> impl Strategy<Value = BivPoly> {
    let support: Vec<(u32, u32)> = (0..=3u32).flat_map(|i| (0..=3 - i).map(move |j| (i, j))).collect();
    prop::collection::vec(-2i64..=2, support.len()).prop_map(move |cs| {
        let terms: Vec<(u32, u32, i64)> = support.iter().zip(cs).map(|(&(i, j), c)| (i, j, c)).collect();
        BivPoly::from_ints(&terms)
    })
}

/// `F(y + y0, p)`.
fn shift(f: &BivPoly, y0: &Alg) -> BivPoly {
    let tw = Tower::rationals();
    let lin = BivPoly::y().add(&BivPoly::constant(y0.clone()));
    let mut out = BivPoly::zero();
    for (&(i, j), c) in f.terms() {
        let t = lin.pow(&tw, i).mul(&tw, &BivPoly::monomial(0, j, c.clone()));
        out = out.add(&t);
    }
    out
}

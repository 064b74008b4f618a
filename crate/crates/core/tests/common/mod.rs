#![allow(dead_code)]

use puiseux_core::algnum::{Alg, Rational, Tower};
use puiseux_core::oracle::numeric::{embeddings, eval_alg, Cx};
use puiseux_core::series::PuiseuxTruncation;
use puiseux_core::poly::{BivPoly, Coord, CurvePoint};
use puiseux_core::solver::{puiseux_solve, puiseux_solve_at, puiseux_solve_infinity, SolutionTruncation, SolveOptions, SolveReport};

/// `((p-1)^2 + y^2)^3 - 4 (p-1)^2 y^2`.
pub fn example() -> BivPoly {
    BivPoly::from_ints(&[
        (6, 0, 1),
        (4, 2, 3),
        (4, 1, -6),
        (4, 0, 3),
        (2, 4, 3),
        (2, 3, -12),
        (2, 2, 14),
        (2, 1, -4),
        (2, 0, -1),
        (0, 6, 1),
        (0, 5, -6),
        (0, 4, 15),
        (0, 3, -20),
        (0, 2, 15),
        (0, 1, -6),
        (0, 0, 1),
    ])
}

pub fn parabola() -> BivPoly {
    BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)])
}

pub fn cusp() -> BivPoly {
    BivPoly::from_ints(&[(0, 6, 64), (2, 0, -729)])
}

pub fn riccati() -> BivPoly {
    BivPoly::from_ints(&[(0, 1, 1), (2, 0, 1)])
}

/// `(1 + y) p + y^2`.
pub fn riccati_rejected() -> BivPoly {
    BivPoly::from_ints(&[(0, 1, 1), (1, 1, 1), (2, 0, 1)])
}

pub fn cubic_cusp() -> BivPoly {
    BivPoly::from_ints(&[(0, 3, 1), (2, 0, -1)])
}

/// `y p^2 - 1`: one place above `y = 0`, at `p = ∞`.
pub fn pole_slope() -> BivPoly {
    BivPoly::from_ints(&[(1, 2, 1), (0, 0, -1)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Finite,
    Infinity,
}

/// A solver run whose output the suite treats as golden.
pub struct Golden {
    pub name: &'static str,
    pub f: BivPoly,
    pub mode: Mode,
    pub tower: Tower,
    pub point: Option<CurvePoint>,
    pub terms: Option<u32>,
}

impl Golden {
    pub fn run(&self, terms: Option<u32>) -> SolveReport {
        let opts = SolveOptions { terms };
        match (self.mode, &self.point) {
            (Mode::Infinity, _) => puiseux_solve_infinity(&self.f, &opts),
            (Mode::Finite, Some(pt)) => puiseux_solve_at(&self.tower, &self.f, pt, &opts),
            (Mode::Finite, None) => puiseux_solve(&self.f, &opts),
        }
        .unwrap_or_else(|e| panic!("{}: {e}", self.name))
    }

    pub fn report(&self) -> SolveReport {
        self.run(self.terms)
    }
}

fn at(y0: Alg, p0: Coord) -> Option<CurvePoint> {
    Some(CurvePoint::new(Coord::Finite(y0), p0))
}

/// `y0` and `p0` adjoined as roots of `y^2 - 16/27` and `p^2 - 2p + 19/27`.
pub fn beta_gamma_center() -> (Tower, CurvePoint) {
    let (tw, y0) = Tower::rationals().adjoin_root(&[Alg::from_frac(-16, 27), Alg::zero(), Alg::one()], "y0").unwrap();
    let (tw, p0) = tw.adjoin_root(&[Alg::from_frac(19, 27), Alg::from_int(-2), Alg::one()], "p0").unwrap();
    (tw, CurvePoint::finite(y0, p0))
}

/// The runs mirrored by the command-line golden files, plus a few more.
pub fn goldens() -> Vec<Golden> {
    let q = Tower::rationals();
    let (bg_tw, bg) = beta_gamma_center();
    vec![
        Golden { name: "parabola", f: parabola(), mode: Mode::Finite, tower: q.clone(), point: None, terms: None },
        Golden {
            name: "parabola at (0,0)",
            f: parabola(),
            mode: Mode::Finite,
            tower: q.clone(),
            point: at(Alg::zero(), Coord::Finite(Alg::zero())),
            terms: None,
        },
        Golden {
            name: "cusp at (0,0)",
            f: cusp(),
            mode: Mode::Finite,
            tower: q.clone(),
            point: at(Alg::zero(), Coord::Finite(Alg::zero())),
            terms: Some(6),
        },
        Golden { name: "p^3 - y^2", f: cubic_cusp(), mode: Mode::Finite, tower: q.clone(), point: None, terms: None },
        Golden {
            name: "example at (0,1)",
            f: example(),
            mode: Mode::Finite,
            tower: q.clone(),
            point: at(Alg::zero(), Coord::Finite(Alg::one())),
            terms: Some(7),
        },
        Golden { name: "example at c_beta_gamma", f: example(), mode: Mode::Finite, tower: bg_tw, point: Some(bg), terms: Some(4) },
        Golden {
            name: "example at (∞,∞)",
            f: example(),
            mode: Mode::Finite,
            tower: q.clone(),
            point: Some(CurvePoint::new(Coord::Infinity, Coord::Infinity)),
            terms: Some(7),
        },
        Golden { name: "riccati at infinity", f: riccati(), mode: Mode::Infinity, tower: q.clone(), point: None, terms: None },
        Golden { name: "(1+y)p + y^2 at infinity", f: riccati_rejected(), mode: Mode::Infinity, tower: q.clone(), point: None, terms: None },
    ]
}

/// The output of `later` that extends `s`: same shape, and equal
/// coefficients wherever `s` is known.
pub fn extension<'a>(s: &SolutionTruncation, later: &'a SolveReport) -> Option<&'a SolutionTruncation> {
    later.solutions.iter().find(|t| {
        let same_shape = t.kind.label() == s.kind.label()
            && t.ramification == s.ramification
            && t.tower_lines() == s.tower_lines()
            && t.display_center() == s.display_center()
            && t.at_infinity == s.at_infinity;
        let prefix = match s.series.known_order() {
            Some(k) => t.series.truncate(k).display(&t.tower, "x") == s.series.display(&s.tower, "x"),
            None => t.series.display(&t.tower, "x") == s.series.display(&s.tower, "x"),
        };
        same_shape && prefix
    })
}

pub const NUM_BITS: usize = 256;
pub const NUM_TOL: i64 = -100;

/// A truncation under one embedding: ramification, known order in `x`
/// (`None` when exact) and coefficients by exponent.
pub struct Conj {
    pub n: u32,
    pub known: Option<Rational>,
    pub coeffs: Vec<(Rational, Cx)>,
}

pub fn conjugates_of(s: &PuiseuxTruncation, tw: &Tower) -> Vec<Conj> {
    embeddings(tw, NUM_BITS)
        .into_iter()
        .map(|e| Conj {
            n: s.ram_index(),
            known: s.known_order_x(),
            coeffs: (s.low()..=s.high()).map(|j| (s.exponent(j), eval_alg(&s.coeff(j), &e, &[], NUM_BITS))).collect(),
        })
        .collect()
}

pub fn conj_match(a: &Conj, b: &Conj) -> bool {
    if a.n != b.n {
        return false;
    }
    let bound = match (&a.known, &b.known) {
        (Some(x), Some(y)) => Some(x.min(y).clone()),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    };
    let below = |e: &Rational| bound.as_ref().is_none_or(|b| e < b);
    let zero = Cx::zero(NUM_BITS);
    let at = |c: &Conj, e: &Rational| c.coeffs.iter().find(|(x, _)| x == e).map(|(_, v)| v.clone()).unwrap_or_else(|| zero.clone());
    a.coeffs.iter().chain(b.coeffs.iter()).filter(|(e, _)| below(e)).all(|(e, _)| at(a, e).sub(&at(b, e)).log2_abs().is_none_or(|x| x < NUM_TOL))
}

pub fn dedup(xs: Vec<Conj>) -> Vec<Conj> {
    let mut out: Vec<Conj> = Vec::new();
    for x in xs {
        if !out.iter().any(|y| conj_match(&x, y)) {
            out.push(x);
        }
    }
    out
}

pub fn covered(xs: &[Conj], ys: &[Conj]) -> bool {
    xs.iter().all(|x| ys.iter().any(|y| conj_match(x, y)))
}

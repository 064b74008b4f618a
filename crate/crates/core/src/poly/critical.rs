use crate::algnum::{upoly, Alg, Tower};
use crate::error::{Error, Result};

use super::{qpoly, BivPoly};

/// A coordinate in `C ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coord {
    Finite(Alg),
    Infinity,
}

impl Coord {
    pub fn finite(&self) -> Option<&Alg> {
        match self {
            Coord::Finite(a) => Some(a),
            Coord::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Coord::Infinity)
    }

    pub fn display(&self, tw: &Tower) -> String {
        match self {
            Coord::Finite(a) => tw.display(a),
            Coord::Infinity => "oo".into(),
        }
    }
}

/// A point `(y0, p0)` of the curve `F(y, p) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurvePoint {
    pub y0: Coord,
    pub p0: Coord,
}

impl CurvePoint {
    pub fn finite(y0: Alg, p0: Alg) -> Self {
        CurvePoint { y0: Coord::Finite(y0), p0: Coord::Finite(p0) }
    }

    pub fn new(y0: Coord, p0: Coord) -> Self {
        CurvePoint { y0, p0 }
    }

    /// Exact membership test. For infinite coordinates the corresponding
    /// leading coefficient has to vanish.
    pub fn is_on_curve(&self, tw: &Tower, f: &BivPoly) -> Result<bool> {
        match (&self.y0, &self.p0) {
            (Coord::Finite(y), Coord::Finite(p)) => tw.is_zero(&f.evaluate(tw, y, p)),
            (Coord::Finite(y), Coord::Infinity) => {
                let fib = f.eval_y(tw, y);
                tw.is_zero(fib.last().unwrap())
            }
            (Coord::Infinity, Coord::Finite(p)) => {
                let fib = f.swap_vars().eval_y(tw, p);
                tw.is_zero(fib.last().unwrap())
            }
            (Coord::Infinity, Coord::Infinity) => Ok(infinity_on_curve(f)),
        }
    }

    pub fn display(&self, tw: &Tower) -> String {
        format!("({}, {})", self.y0.display(tw), self.p0.display(tw))
    }
}

/// A critical point together with the tower its coordinates live in.
#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub tower: Tower,
    pub point: CurvePoint,
}

#[derive(Clone, Debug)]
pub struct CriticalSet {
    /// Points with finite `y0`, one symbolic branch per conjugacy class.
    pub points: Vec<CriticalPoint>,
    /// Whether `(∞, ∞)` lies on the curve.
    pub infinity_infinity: bool,
}

/// `(∞, ∞)` is on the closure of the curve iff the corner coefficient
/// `F_{deg_y, deg_p}` vanishes.
pub fn infinity_on_curve(f: &BivPoly) -> bool {
    f.coeff(f.deg_y(), f.deg_p()).is_literal_zero()
}

/// The critical points of the curve: `p0 = 0`, `p0 = ∞`, or `∂F/∂p = 0`,
/// with finite `y0`, plus the `(∞, ∞)` flag. `F` must have rational
/// coefficients, be squarefree and content free.
pub fn critical_points(f: &BivPoly) -> Result<CriticalSet> {
    let q = f.to_qy()?;
    if q.len() < 2 {
        return Err(Error::Precondition("polynomial must involve p".into()));
    }
    let res = qpoly::resultant(&q, &f.derivative_p().to_qy()?);
    if res.is_empty() {
        return Err(Error::Precondition("polynomial is not squarefree".into()));
    }
    let prod = qpoly::mul(&qpoly::mul(&q[0], q.last().unwrap()), &res);
    let sq = qpoly::squarefree(&prod);
    let poly: Vec<Alg> = sq.into_iter().map(Alg::from_rational).collect();
    let tw = Tower::rationals();
    let points = tw.with_roots(&poly, "y0", &|tw: &Tower, y0: &Alg| points_over(tw, f, y0))?;
    Ok(CriticalSet { points, infinity_infinity: infinity_on_curve(f) })
}

fn points_over(tw: &Tower, f: &BivPoly, y0: &Alg) -> Result<Vec<CriticalPoint>> {
    let fib = f.eval_y(tw, y0);
    let mut out = Vec::new();
    let at = |tw: &Tower, p0: Coord| CriticalPoint { tower: tw.clone(), point: CurvePoint::new(Coord::Finite(tw.reduce(y0)), p0) };
    let fib_t = upoly::trim(tw, &fib)?;
    if fib_t.is_empty() {
        return Err(Error::Precondition("polynomial has content in y".into()));
    }
    let zero_root = tw.is_zero(&fib_t[0])?;
    if zero_root {
        out.push(at(tw, Coord::Finite(Alg::zero())));
    }
    for (fac, mult) in upoly::squarefree_decomposition(tw, &fib_t)? {
        if mult < 2 {
            continue;
        }
        out.extend(tw.with_roots(&fac, "p0", &|tw: &Tower, p0: &Alg| {
            if tw.is_zero(p0)? {
                Ok(vec![])
            } else {
                Ok(vec![at(tw, Coord::Finite(tw.reduce(p0)))])
            }
        })?);
    }
    if fib_t.len() < fib.len() {
        out.push(at(tw, Coord::Infinity));
    }
    Ok(out)
}

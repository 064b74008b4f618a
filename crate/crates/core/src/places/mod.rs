//! Classical Puiseux parametrizations `(y0 + t^k, b(t))` of the curve
//! `F(y, p) = 0` centered at a given point.

mod expand;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algnum::{Alg, Rational, Tower};
use crate::error::{Error, Result};
use crate::poly::{strip_content, BivPoly, Coord, CurvePoint};
use crate::series::PuiseuxTruncation;
use expand::descend;

#[derive(Clone, Debug)]
pub struct Place {
    pub center: CurvePoint,
    pub tower: Tower,
    /// `y0 + t^k`, exact.
    pub a: PuiseuxTruncation,
    /// Known modulo `t^(r + N)`.
    pub b: PuiseuxTruncation,
    pub k: u32,
    pub r: i64,
}

impl Place {
    pub fn y0(&self) -> &Alg {
        self.center.y0.finite().expect("places have finite y0")
    }

    pub fn display(&self) -> String {
        format!("({}, {})", self.a.display(&self.tower, "t"), self.b.display(&self.tower, "t"))
    }
}

/// `F(y0 + u, p0 + v)`.
pub fn shift_poly(tw: &Tower, f: &BivPoly, y0: &Alg, p0: &Alg) -> BivPoly {
    let ys = BivPoly::y().add(&BivPoly::constant(y0.clone()));
    let ps = BivPoly::p().add(&BivPoly::constant(p0.clone()));
    let ypow: Vec<BivPoly> = (0..=f.deg_y()).scan(BivPoly::constant(Alg::one()), |acc, i| {
        if i > 0 {
            *acc = acc.mul(tw, &ys);
        }
        Some(acc.clone())
    }).collect();
    let ppow: Vec<BivPoly> = (0..=f.deg_p()).scan(BivPoly::constant(Alg::one()), |acc, j| {
        if j > 0 {
            *acc = acc.mul(tw, &ps);
        }
        Some(acc.clone())
    }).collect();
    let mut out = BivPoly::zero();
    for (&(i, j), c) in f.terms() {
        out = out.add(&ypow[i as usize].mul(tw, &ppow[j as usize]).scale(tw, c));
    }
    out
}

/// `w^deg_p F(y, 1/w)`.
pub fn reverse_p(f: &BivPoly) -> BivPoly {
    let d = f.deg_p();
    BivPoly::from_terms(f.terms().map(|(&(i, j), c)| ((i, d - j), c.clone())))
}

/// The places of the curve centered at `center` (finite `y0`), with `b`
/// computed to `n_terms` terms past its leading exponent. Conjugate places
/// share one symbolic branch.
pub fn places_at_point(tw: &Tower, f: &BivPoly, center: &CurvePoint, n_terms: i64) -> Result<Vec<Place>> {
    let y0 = center.y0.finite().ok_or_else(|| Error::Precondition("y0 must be finite".into()))?.clone();
    tw.branch(&|tw: &Tower| {
        if !center.is_on_curve(tw, f)? {
            return Err(Error::NotOnCurve);
        }
        let (g, p0) = match &center.p0 {
            Coord::Finite(p0) => (shift_poly(tw, f, &y0, p0), Some(p0.clone())),
            Coord::Infinity => (shift_poly(tw, &reverse_p(f), &y0, &Alg::zero()), None),
        };
        let mut out = Vec::new();
        for br in descend(tw, &g)? {
            let k = br.k();
            let rho = br.order();
            let btw = br.tower.clone();
            let a = PuiseuxTruncation::exact(1, 0, vec![y0.clone()]).add(&PuiseuxTruncation::monomial(1, k as i64, Alg::one()));
            let (b, r) = match &p0 {
                Some(p0) => {
                    let r = if btw.is_zero(p0)? { rho } else { 0 };
                    let v = br.expand(r + n_terms)?;
                    (v.add(&PuiseuxTruncation::constant(p0.clone())).truncate(r + n_terms), r)
                }
                None => {
                    let w = br.expand(rho + n_terms)?;
                    (w.recip(&btw, n_terms)?, -rho)
                }
            };
            let b = b.normalize(&btw)?;
            let center = CurvePoint::new(Coord::Finite(btw.reduce(&y0)), center.p0.clone());
            out.push(Place { center, tower: btw, a, b, k, r });
        }
        Ok(out)
    })
}

/// Numerator of `F(1/y, -p/y^2)`, content stripped: the equation satisfied
/// by `1/y` when `y` solves `F(y, x^h y') = 0`. The result does not depend
/// on `h`.
pub fn transform_infinity(f: &BivPoly, _h: i64) -> Result<BivPoly> {
    let e = f.terms().map(|(&(i, j), _)| i + 2 * j).max().unwrap_or(0);
    let g = BivPoly::from_terms(f.terms().map(|(&(i, j), c)| {
        let c = if j % 2 == 1 { c.neg() } else { c.clone() };
        ((e - i - 2 * j, j), c)
    }));
    Ok(strip_content(&g)?.0)
}

/// `(k, r, n)` with `n = (k - r)/(1 - h)`; `n` is `None` for `h = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationData {
    pub k: u32,
    pub r: i64,
    pub n: Option<Rational>,
}

impl RamificationData {
    /// The candidate ramification index when it is a positive integer.
    pub fn positive_integer(&self) -> Option<u32> {
        let n = self.n.as_ref()?;
        (n.is_integer() && *n > Rational::zero()).then(|| n.to_integer().try_into().ok()).flatten()
    }
}

pub fn ramification_data(place: &Place, h: i64) -> RamificationData {
    let n = (h != 1).then(|| Rational::new(BigInt::from(place.k as i64 - place.r), BigInt::from(1 - h)));
    RamificationData { k: place.k, r: place.r, n }
}

/// The `k` equivalent parametrizations `(a(t), b(w t))`, `w^k = 1`.
pub fn expand_conjugates(place: &Place) -> Result<Vec<Place>> {
    let (tw, w) = place.tower.root_of_unity(place.k);
    let mut out = Vec::with_capacity(place.k as usize);
    let mut cur = Alg::one();
    for _ in 0..place.k {
        let b = place.b.rescale_var(&tw, &cur)?;
        out.push(Place { tower: tw.clone(), b, ..place.clone() });
        cur = tw.mul(&cur, &w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

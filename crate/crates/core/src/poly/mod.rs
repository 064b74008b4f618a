//! Polynomials `F(y, p)` in the unknown and its derivative, with the
//! eliminants needed to locate critical curve points.

mod critical;
mod newton;
pub mod qpoly;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algnum::{upoly, Alg, Rational, Tower};
use crate::error::{Error, Result};
pub use critical::{critical_points, infinity_on_curve, Coord, CriticalPoint, CriticalSet, CurvePoint};
pub use newton::{lower_hull, newton_polygon, NewtonPolygon, NewtonPolygonEdge};
use qpoly::{QPoly, QyPoly};

/// `F = sum F_ij y^i p^j`, keyed by `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivPoly {
    terms: BTreeMap<(u32, u32), Alg>,
}

impl BivPoly {
    pub fn zero() -> Self {
        BivPoly::default()
    }

    pub fn constant(c: Alg) -> Self {
        BivPoly::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: Alg) -> Self {
        let mut f = BivPoly::zero();
        f.add_term(i, j, c);
        f
    }

    pub fn y() -> Self {
        BivPoly::monomial(1, 0, Alg::one())
    }

    pub fn p() -> Self {
        BivPoly::monomial(0, 1, Alg::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Alg)>>(it: I) -> Self {
        let mut f = BivPoly::zero();
        for ((i, j), c) in it {
            f.add_term(i, j, c);
        }
        f
    }

    /// Shorthand for integer coefficients: `[(i, j, c), ...]`.
    pub fn from_ints(terms: &[(u32, u32, i64)]) -> Self {
        BivPoly::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), Alg::from_int(c))))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Alg) {
        if c.is_literal_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_default();
        e.add_assign(&c);
        if e.is_literal_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Alg)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Alg {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_p(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0 + k.1).max().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Alg::is_rational)
    }

    pub fn add(&self, other: &BivPoly) -> BivPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BivPoly {
        BivPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn sub(&self, other: &BivPoly) -> BivPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, tw: &Tower, other: &BivPoly) -> BivPoly {
        let mut out = BivPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul_raw(c2));
            }
        }
        out.reduce(tw)
    }

    pub fn pow(&self, tw: &Tower, e: u32) -> BivPoly {
        (0..e).fold(BivPoly::constant(Alg::one()), |acc, _| acc.mul(tw, self))
    }

    pub fn scale(&self, tw: &Tower, c: &Alg) -> BivPoly {
        BivPoly::from_terms(self.terms.iter().map(|(k, x)| (*k, tw.mul(x, c))))
    }

    /// Canonical coefficients in `tw`; drops literal zeros.
    pub fn reduce(&self, tw: &Tower) -> BivPoly {
        BivPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, tw.reduce(c))))
    }

    /// Drops coefficients that are zero in `tw` (may split).
    pub fn normalize(&self, tw: &Tower) -> Result<BivPoly> {
        let mut out = BivPoly::zero();
        for (&(i, j), c) in &self.terms {
            if !tw.is_zero(c)? {
                out.add_term(i, j, tw.reduce(c));
            }
        }
        Ok(out)
    }

    pub fn derivative_y(&self) -> BivPoly {
        BivPoly::from_terms(self.terms.iter().filter(|(k, _)| k.0 > 0).map(|(&(i, j), c)| ((i - 1, j), c.scale_int(i as i64))))
    }

    pub fn derivative_p(&self) -> BivPoly {
        BivPoly::from_terms(self.terms.iter().filter(|(k, _)| k.1 > 0).map(|(&(i, j), c)| ((i, j - 1), c.scale_int(j as i64))))
    }

    pub fn evaluate(&self, tw: &Tower, y: &Alg, p: &Alg) -> Alg {
        let mut acc = Alg::zero();
        for (&(i, j), c) in &self.terms {
            acc.add_assign(&tw.mul(c, &tw.mul(&tw.pow(y, i), &tw.pow(p, j))));
        }
        tw.reduce(&acc)
    }

    /// `F(y0, p)` as a univariate polynomial in `p` (untrimmed).
    pub fn eval_y(&self, tw: &Tower, y0: &Alg) -> Vec<Alg> {
        let mut out = vec![Alg::zero(); self.deg_p() as usize + 1];
        for (&(i, j), c) in &self.terms {
            out[j as usize].add_assign(&tw.mul(c, &tw.pow(y0, i)));
        }
        out.iter().map(|c| tw.reduce(c)).collect()
    }

    /// Coefficients of `F` as a polynomial in `p` over `Q[y]`.
    pub(crate) fn to_qy(&self) -> Result<QyPoly> {
        let mut out: QyPoly = vec![vec![]; self.deg_p() as usize + 1];
        for (&(i, j), c) in &self.terms {
            let r = c.as_rational().ok_or_else(|| Error::Precondition("rational coefficients required".into()))?;
            let col = &mut out[j as usize];
            if col.len() <= i as usize {
                col.resize(i as usize + 1, Rational::zero());
            }
            col[i as usize] += r;
        }
        Ok(qpoly::trim_y(out))
    }

    pub(crate) fn from_qy(f: &QyPoly) -> BivPoly {
        let mut out = BivPoly::zero();
        for (j, col) in f.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                out.add_term(i as u32, j as u32, Alg::from_rational(c.clone()));
            }
        }
        out
    }

    /// Same polynomial with the roles of `y` and `p` exchanged.
    pub fn swap_vars(&self) -> BivPoly {
        BivPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn display_with(&self, tw: &Tower) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            match i {
                0 => {}
                1 => vars.push("y".to_string()),
                _ => vars.push(format!("y^{i}")),
            }
            match j {
                0 => {}
                1 => vars.push("p".to_string()),
                _ => vars.push(format!("p^{j}")),
            }
            let cs = tw.display(c);
            let term = if vars.is_empty() {
                if c.num_terms() > 1 { format!("({cs})") } else { cs }
            } else if cs == "1" {
                vars.join("*")
            } else if cs == "-1" {
                format!("-{}", vars.join("*"))
            } else if c.num_terms() > 1 {
                format!("({cs})*{}", vars.join("*"))
            } else {
                format!("{cs}*{}", vars.join("*"))
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for BivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&Tower::rationals()))
    }
}

/// Product of the distinct irreducible factors of `F`, as
/// `F / gcd(F, F_y, F_p)` (no factorization). Rational input only.
pub fn squarefree_part(f: &BivPoly) -> Result<BivPoly> {
    if f.is_constant() {
        return Err(Error::Precondition("constant polynomial".into()));
    }
    let q = f.to_qy()?;
    let g = qpoly::gcd_y(&qpoly::gcd_y(&q, &f.derivative_y().to_qy()?), &f.derivative_p().to_qy()?);
    if g.len() <= 1 && qpoly::is_const(g.first().map_or(&[][..], |v| v)) {
        return Ok(f.clone());
    }
    Ok(BivPoly::from_qy(&qpoly::div_exact_y(&q, &g)))
}

/// Factors removed by [`strip_content`]: polynomials in `y` alone (their
/// roots are constant solutions) and in `p` alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContentReport {
    pub y_factors: Vec<BivPoly>,
    pub p_factors: Vec<BivPoly>,
}

impl ContentReport {
    pub fn is_empty(&self) -> bool {
        self.y_factors.is_empty() && self.p_factors.is_empty()
    }
}

/// Removes every factor depending on `y` alone or on `p` alone.
pub fn strip_content(f: &BivPoly) -> Result<(BivPoly, ContentReport)> {
    if f.is_constant() {
        return Err(Error::Precondition("constant polynomial".into()));
    }
    let mut report = ContentReport::default();
    let mut q = f.to_qy()?;
    let cy: QPoly = qpoly::y_content(&q);
    if !qpoly::is_const(&cy) {
        q = qpoly::y_divide(&q, &cy);
        report.y_factors.push(BivPoly::from_qy(&vec![cy]));
    }
    // content in p: swap roles
    let mut qs = BivPoly::from_qy(&q).swap_vars().to_qy()?;
    let cp = qpoly::y_content(&qs);
    if !qpoly::is_const(&cp) {
        qs = qpoly::y_divide(&qs, &cp);
        report.p_factors.push(BivPoly::from_qy(&vec![cp]).swap_vars());
    }
    let out = BivPoly::from_qy(&qs).swap_vars();
    if out.is_constant() {
        return Err(Error::DegenerateEquation);
    }
    Ok((normalize_sign(&out), report))
}

/// Scales a rational polynomial so that its leading coefficient (highest
/// `p`, then highest `y`) is one.
fn normalize_sign(f: &BivPoly) -> BivPoly {
    let lead = f.terms.iter().max_by_key(|(&(i, j), _)| (j, i)).map(|(_, c)| c.as_rational().unwrap());
    match lead {
        Some(l) if !l.is_zero() => BivPoly::from_terms(f.terms.iter().map(|(k, c)| (*k, c.scale(&l.recip())))),
        _ => f.clone(),
    }
}

/// `Res_p(F, G)` for rational input, as a polynomial in `y`.
pub fn resultant_p(f: &BivPoly, g: &BivPoly) -> Result<QPoly> {
    Ok(qpoly::resultant(&f.to_qy()?, &g.to_qy()?))
}

/// `Disc_p(F) = (-1)^(d(d-1)/2) Res_p(F, F_p) / lc_p(F)`.
pub fn discriminant_p(f: &BivPoly) -> Result<QPoly> {
    let q = f.to_qy()?;
    let d = q.len() - 1;
    let r = qpoly::resultant(&q, &f.derivative_p().to_qy()?);
    let (quo, rem) = qpoly::div_rem(&r, q.last().unwrap());
    debug_assert!(rem.is_empty());
    Ok(if (d * (d.saturating_sub(1)) / 2) % 2 == 1 { qpoly::neg(&quo) } else { quo })
}

/// `F(y0, p)` trimmed over the tower.
pub fn fiber(tw: &Tower, f: &BivPoly, y0: &Alg) -> Result<Vec<Alg>> {
    upoly::trim(tw, &f.eval_y(tw, y0))
}

#[cfg(test)]
pub(crate) mod tests;

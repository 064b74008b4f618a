//! Reparametrizations `s(t) = t (sigma + z(t))` turning a place into a
//! solution `y(x) = a(s(x^(1/n)))` of `F(y, x^h y') = 0`.

use crate::algnum::{Alg, Rational, Tower};
use crate::briot::{solve_briot, BriotKind};
use crate::error::{Error, Result};
use crate::places::{ramification_data, Place};
use crate::poly::BivPoly;
use crate::series::PuiseuxTruncation;

#[derive(Clone, Debug)]
pub struct ReparamProblem {
    pub place: Place,
    pub h: i64,
    pub n: u32,
    /// `|k - r|`.
    pub nu: u32,
    /// `+1` around a finite point, `-1` for expansions at infinity.
    pub sign: i64,
}

impl ReparamProblem {
    /// `None` when the order condition `n (1 - h) = k - r` has no positive
    /// integer solution `n`.
    pub fn new(place: &Place, h: i64, sign: i64) -> Option<Self> {
        let n = ramification_data(place, h).positive_integer()?;
        let nu = (place.k as i64 - place.r).unsigned_abs() as u32;
        (nu >= 1).then(|| ReparamProblem { place: place.clone(), h, n, nu, sign })
    }

    fn high_regime(&self) -> bool {
        self.h >= 2
    }

    /// `a~_i = (k + i) a_i` where `a - y0 = sum a_i t^(k+i)`.
    fn a_tilde(&self) -> Vec<Alg> {
        let k = self.place.k as i64;
        let a = &self.place.a;
        let hi = a.high().max(k + 1);
        (k..hi).map(|e| a.coeff(e).scale_int(e)).collect()
    }

    /// `b_i`, the coefficient of `t^(r+i)`, for the known terms.
    fn b_coeffs(&self) -> Vec<Alg> {
        let b = &self.place.b;
        let r = self.place.r;
        let top = b.known_order().unwrap_or(b.high().max(r + 1));
        (r..top).map(|e| b.coeff(e)).collect()
    }

    /// Right-hand side constant `sign * n * b_0 / a~_0` (or its inverse).
    fn sigma_power(&self, tw: &Tower) -> Result<Alg> {
        let a0 = self.a_tilde()[0].clone();
        let nb0 = self.b_coeffs()[0].scale_int(self.sign * self.n as i64);
        if self.high_regime() {
            tw.div(&a0, &nb0)
        } else {
            tw.div(&nb0, &a0)
        }
    }
}

/// The `nu` values of `sigma_1`, adjoined to the place's tower.
pub fn sigma1_candidates(p: &ReparamProblem) -> Result<(Tower, Vec<Alg>)> {
    let tw = &p.place.tower;
    let x = p.sigma_power(tw)?;
    tw.all_nth_roots(&x, p.nu, &tw.fresh_name("σ"))
}

#[derive(Clone, Debug)]
pub struct ReparamSolution {
    pub sigma: Alg,
    pub tower: Tower,
    pub kind: BriotKind,
    /// `s(t)`, empty when `kind` is `Empty`.
    pub s: PuiseuxTruncation,
}

/// `sum_e c_e (sigma + z)^e t^i`, keeping total degree `<= n` in `(t, z)`.
fn add_binomial(tw: &Tower, out: &mut BivPoly, c: &Alg, i: u32, e: u32, sigma: &Alg, n: u32) {
    if i > n || c.is_literal_zero() {
        return;
    }
    let jmax = e.min(n - i);
    let mut binom = Rational::from_integer(1.into());
    let mut sp = tw.pow(sigma, e - jmax);
    let mut terms = Vec::with_capacity(jmax as usize + 1);
    // walk j from jmax down to 0 so that the sigma power grows
    let mut binoms = Vec::with_capacity(jmax as usize + 1);
    for j in 0..=jmax {
        binoms.push(binom.clone());
        binom = binom * Rational::from_integer((e - j).into()) / Rational::from_integer((j + 1).into());
    }
    for j in (0..=jmax).rev() {
        terms.push((j, tw.mul(c, &sp).scale(&binoms[j as usize])));
        sp = tw.mul(&sp, sigma);
    }
    for (j, v) in terms {
        out.add_term(i, j, v);
    }
}

/// The Briot–Bouquet pair `(g, f)` for a given `sigma`, truncated at total
/// degree `n_terms`.
pub fn assemble(p: &ReparamProblem, tw: &Tower, sigma: &Alg, n_terms: u32) -> (BivPoly, BivPoly) {
    let at = p.a_tilde();
    let bs = p.b_coeffs();
    let nu = p.nu;
    let sn = p.sign * p.n as i64;
    let mut g = BivPoly::zero();
    let mut f = BivPoly::zero();
    for (i, a) in at.iter().enumerate() {
        let i = i as u32;
        if p.high_regime() {
            add_binomial(tw, &mut g, a, i, i, sigma, n_terms);
            add_binomial(tw, &mut f, &a.neg(), i, i + 1, sigma, n_terms);
        } else {
            add_binomial(tw, &mut g, a, i, i + nu - 1, sigma, n_terms);
            add_binomial(tw, &mut f, &a.neg(), i, i + nu, sigma, n_terms);
        }
    }
    for (i, b) in bs.iter().enumerate() {
        let i = i as u32;
        let c = b.scale_int(sn);
        let e = if p.high_regime() { i + nu + 1 } else { i };
        add_binomial(tw, &mut f, &c, i, e, sigma, n_terms);
    }
    (g.reduce(tw), f.reduce(tw))
}

/// One solution per `sigma_1` candidate, `s` known modulo `t^(N+2)`. The
/// computation uses at most as many terms as the place provides.
pub fn reparametrize(p: &ReparamProblem, n_terms: u32) -> Result<Vec<ReparamSolution>> {
    let available = p.b_coeffs().len() as u32;
    if available == 0 {
        return Err(Error::Precondition("place has no known terms".into()));
    }
    let n_eff = n_terms.min(available - 1);
    let (tw, sigmas) = sigma1_candidates(p)?;
    let mut out = Vec::new();
    for sigma in sigmas {
        let found = tw.branch(&|tw: &Tower| {
            let sigma = tw.reduce(&sigma);
            let (g, f) = assemble(p, tw, &sigma, n_eff);
            let sol = solve_briot(tw, &g, &f, n_eff as usize)?;
            let s = match sol.kind {
                BriotKind::Empty => PuiseuxTruncation::zero(1, Some(1)),
                _ => {
                    let mut coeffs = vec![sigma.clone()];
                    coeffs.extend(sol.coeffs.iter().cloned());
                    PuiseuxTruncation::new(1, 1, coeffs, Some(n_eff as i64 + 2))
                }
            };
            Ok(vec![ReparamSolution { sigma: sigma.clone(), tower: sol.tower, kind: sol.kind, s }])
        })?;
        out.extend(found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

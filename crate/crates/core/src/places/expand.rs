//! Newton–Puiseux descent at the origin of `G(u, v)` over a tower.

use crate::algnum::{upoly, Alg, Tower};
use crate::error::Result;
use crate::poly::{newton_polygon, BivPoly};
use crate::series::{substitute_into, PuiseuxTruncation};

/// One substitution `u = t^m`, `v = t^q (c + v1)`.
#[derive(Clone, Debug)]
pub(crate) struct Stage {
    pub m: u32,
    pub q: u32,
    pub c: Alg,
}

#[derive(Clone, Debug)]
pub(crate) enum Tail {
    /// The remaining unknown vanishes identically.
    Zero,
    /// `H(t, w) = 0` with `H(0, 0) = 0` and `H_w(0, 0) != 0`.
    Simple(BivPoly),
}

/// A branch of `G = 0` through the origin with `v -> 0`, not yet expanded.
#[derive(Clone, Debug)]
pub(crate) struct RawBranch {
    pub tower: Tower,
    pub stages: Vec<Stage>,
    pub tail: Tail,
}

impl RawBranch {
    /// `k` with `u = tau^k` in the final local variable.
    pub fn k(&self) -> u32 {
        self.stages.iter().map(|s| s.m).product()
    }

    /// Exponents `(E_i)` with `v = sum_i c_i tau^(E_i) + tau^(E_last) w(tau)`.
    fn shifts(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.stages.len());
        let mut acc = 0i64;
        for (i, s) in self.stages.iter().enumerate() {
            let rest: i64 = self.stages[i + 1..].iter().map(|x| x.m as i64).product();
            acc += s.q as i64 * rest;
            out.push(acc);
        }
        out
    }

    /// Valuation of `v` in `tau`.
    pub fn order(&self) -> i64 {
        self.shifts().first().copied().unwrap_or(i64::MAX)
    }

    /// `v(tau)` known modulo `tau^prec`.
    pub fn expand(&self, prec: i64) -> Result<PuiseuxTruncation> {
        let tw = &self.tower;
        let shifts = self.shifts();
        let last = shifts.last().copied().unwrap_or(0);
        let mut v = match &self.tail {
            Tail::Zero => PuiseuxTruncation::zero(1, None),
            Tail::Simple(h) => simple_root(tw, h, prec - last)?,
        };
        v = v.shift(last);
        for (s, e) in self.stages.iter().zip(&shifts) {
            v = v.add(&PuiseuxTruncation::monomial(1, *e, s.c.clone()));
        }
        Ok(v.truncate(prec))
    }
}

/// `G(t^m, t^q (c + w)) / t^level`.
fn substitute_stage(tw: &Tower, g: &BivPoly, m: u32, q: u32, c: &Alg, level: u32) -> BivPoly {
    let mut cpow = vec![Alg::one()];
    for _ in 0..g.deg_p() {
        cpow.push(tw.mul(cpow.last().unwrap(), c));
    }
    let mut out = BivPoly::zero();
    for (&(i, j), gij) in g.terms() {
        let e = m * i + q * j - level;
        let mut binom = Alg::one();
        for l in 0..=j {
            // C(j, l) c^(j - l) w^l
            let coef = tw.mul(gij, &tw.mul(&binom, &cpow[(j - l) as usize]));
            out.add_term(e, l, coef);
            binom = binom.scale(&crate::algnum::rational::rat((j - l) as i64, (l + 1) as i64));
        }
    }
    out.reduce(tw)
}

/// All branches of `G` at the origin with `v -> 0`. `G(0, v)` must not
/// vanish identically.
pub(crate) fn descend(tw: &Tower, g: &BivPoly) -> Result<Vec<RawBranch>> {
    let g = g.normalize(tw)?;
    let mut out = Vec::new();
    let min_j = g.terms().map(|(&(_, j), _)| j).min().unwrap_or(0);
    if min_j > 0 {
        out.push(RawBranch { tower: tw.clone(), stages: vec![], tail: Tail::Zero });
    }
    let np = newton_polygon(&g);
    for edge in &np.edges {
        let (m, q) = (edge.m, edge.q);
        let deg = edge.char_degree() as usize;
        let mut phi = vec![Alg::zero(); deg + 1];
        for &(i, j) in &edge.points {
            phi[((j - edge.end.1) / m) as usize] = g.coeff(i, j);
        }
        for (fac, mult) in upoly::squarefree_decomposition(tw, &phi)? {
            let name = tw.fresh_name("θ");
            let found = tw.with_roots(&fac, &name, &|tw: &Tower, zeta: &Alg| {
                let (tw2, c) = tw.nth_root(zeta, m, &tw.fresh_name("θ"))?;
                tw2.branch(&|tw3: &Tower| {
                    let c = tw3.reduce(&c);
                    let g1 = substitute_stage(tw3, &g, m, q, &c, edge.level);
                    let stage = Stage { m, q, c };
                    if mult == 1 {
                        return Ok(vec![RawBranch { tower: tw3.clone(), stages: vec![stage], tail: Tail::Simple(g1) }]);
                    }
                    let mut subs = descend(tw3, &g1)?;
                    for s in subs.iter_mut() {
                        s.stages.insert(0, stage.clone());
                    }
                    Ok(subs)
                })
            })?;
            out.extend(found);
        }
    }
    Ok(out)
}

/// The unique power series root `w(t)` of `H(t, w) = 0` with `w(0) = 0`,
/// modulo `t^prec`, by Newton iteration.
pub(crate) fn simple_root(tw: &Tower, h: &BivPoly, prec: i64) -> Result<PuiseuxTruncation> {
    if prec <= 1 {
        return Ok(PuiseuxTruncation::zero(1, Some(prec.max(0))));
    }
    let hw = h.derivative_p();
    let t = PuiseuxTruncation::monomial(1, 1, Alg::one());
    let mut w = PuiseuxTruncation::zero(1, Some(1));
    let mut cur = 1i64;
    while cur < prec {
        cur = (2 * cur).min(prec);
        let wc = PuiseuxTruncation::new(1, w.low(), (w.low()..w.high()).map(|j| w.coeff(j)).collect(), Some(cur));
        let val = substitute_into(tw, h, &t, &wc).truncate(cur);
        let der = substitute_into(tw, &hw, &t, &wc).truncate(cur);
        let delta = val.mul(tw, &der.recip(tw, cur)?).truncate(cur);
        w = wc.sub(&delta).truncate(cur);
    }
    Ok(w)
}

//! Undetermined coefficients: `y = y0 + sum_{j>=1} c_j x^(j/n)` solved one
//! coefficient at a time, independently of the place machinery.
//!
//! With `y` fixed up to `t^(j-1)`, a term `c t^j` can first act on the
//! residual at an order `m` read off the Taylor coefficients of `F`. The
//! residual must vanish below `m`, and its coefficient at `m` is a
//! polynomial equation for `c`. When every contribution at `m` cancels,
//! `c` is left free.

use crate::algnum::{upoly, Alg, Mono, Tower};
use crate::error::{Error, Result};
use crate::poly::BivPoly;
use crate::series::{substitute_into, PuiseuxTruncation};

use super::residual::{chart_derivative, residual};

#[derive(Clone, Debug)]
pub struct BruteSolution {
    pub tower: Tower,
    /// Known modulo `x^((N+1)/n)`, ramification reduced.
    pub series: PuiseuxTruncation,
    pub ramification: u32,
    /// Exponents `j` (in `x^(j/n)`) whose coefficient stayed free.
    pub free: Vec<i64>,
}

#[derive(Clone)]
struct Branch {
    tower: Tower,
    y: PuiseuxTruncation,
    free: Vec<i64>,
}

impl Branch {
    /// The same branch over `tw`, a refinement of its tower after a split.
    fn on(&self, tw: &Tower) -> Branch {
        Branch { tower: tw.clone(), y: self.y.map_coeffs(|c| tw.reduce(c)), free: self.free.clone() }
    }
}

/// Coefficients of `x` as a polynomial in parameter `k`.
fn in_param(x: &Alg, k: usize) -> Vec<Alg> {
    let mut out: Vec<Alg> = Vec::new();
    for (m, c) in x.terms() {
        let e = m.params.get(k).copied().unwrap_or(0) as usize;
        let mut params = m.params.clone();
        if k < params.len() {
            params[k] = 0;
        }
        while params.last() == Some(&0) {
            params.pop();
        }
        if out.len() <= e {
            out.resize(e + 1, Alg::zero());
        }
        out[e].add_assign(&Alg::monomial(Mono { gens: m.gens.clone(), params }, c.clone()));
    }
    out
}

const MAX_BRANCHES: usize = 512;

/// Lowest order at which a term `c t^j` can act on the residual at `y`:
/// the minimum over the Taylor coefficients of `F` at `(y, sign x^h y')`.
fn first_action(tw: &Tower, f: &BivPoly, y: &PuiseuxTruncation, j: i64, h: i64, sign: i64) -> Result<i64> {
    let n = y.ram_index() as i64;
    let p = chart_derivative(tw, y, h, sign);
    let mut best = i64::MAX;
    let mut dy = f.clone();
    for a in 0..=f.deg_y() {
        let mut d = dy.clone();
        for bb in 0..=f.deg_p() {
            if a + bb > 0 && !d.is_zero() {
                if let Some(v) = substitute_into(tw, &d, y, &p).normalize(tw)?.valuation(tw)? {
                    best = best.min(v + (a + bb) as i64 * j + bb as i64 * n * (h - 1));
                }
            }
            d = d.derivative_p();
        }
        dy = dy.derivative_y();
    }
    Ok(best)
}

fn step(f: &BivPoly, b: &Branch, j: i64, h: i64, sign: i64) -> Result<Vec<Branch>> {
    let n = b.y.ram_index();
    let base = &b.tower;
    let k = base.params().len();
    let (tp, c) = base.with_param("κ");
    let yc = b.y.add(&PuiseuxTruncation::monomial(n, j, c));
    let r0 = residual(base, f, &b.y, h, sign)?;
    let rc = residual(&tp, f, &yc, h, sign)?;
    let m_lin = first_action(base, f, &b.y, j, h, sign)?;
    if let Some(o0) = r0.valuation(base)? {
        if o0 < m_lin {
            return Ok(vec![]);
        }
    }
    let m = rc.sub(&r0).normalize(&tp)?.valuation(&tp)?;
    if m.is_none_or(|m| m > m_lin) {
        // every contribution of c at order m_lin cancels: c stays free
        if r0.valuation(base)? == Some(m_lin) {
            return Ok(vec![]);
        }
        let (t2, cf) = base.with_param(&format!("c{}", k + 1));
        let mut free = b.free.clone();
        free.push(j);
        return Ok(vec![Branch { tower: t2.clone(), y: b.y.add(&PuiseuxTruncation::monomial(n, j, cf)), free }]);
    }
    let m = m.unwrap();
    let eq = upoly::trim(&tp, &in_param(&tp.reduce(&rc.coeff(m)), k))?;
    let extend = |tw: &Tower, v: &Alg, free: Vec<i64>| Branch {
        tower: tw.clone(),
        y: b.y.add(&PuiseuxTruncation::monomial(n, j, tw.reduce(v))),
        free,
    };
    match eq.len() {
        0 => {
            let (t2, cf) = base.with_param(&format!("c{}", k + 1));
            let mut free = b.free.clone();
            free.push(j);
            Ok(vec![extend(&t2, &cf, free)])
        }
        1 => Ok(vec![]),
        2 if eq.iter().any(Alg::has_params) => {
            let v = base.div(&eq[0].neg(), &eq[1])?;
            Ok(vec![extend(base, &v, b.free.clone())])
        }
        _ if eq.iter().any(Alg::has_params) => Err(Error::Precondition("equation is nonlinear in a free parameter".into())),
        _ => {
            let name = base.fresh_name("κ");
            base.with_roots(&eq, &name, &|tw: &Tower, v: &Alg| Ok(vec![extend(tw, v, b.free.clone())]))
        }
    }
}

/// All truncations with `y(0) = y0` and ramification at most `n_max` of
/// `F(y, sign x^h y') = 0`, each to `n_terms` terms.
pub fn brute_force_solutions(
    tw: &Tower,
    f: &BivPoly,
    y0: &Alg,
    h: i64,
    sign: i64,
    n_max: u32,
    n_terms: u32,
) -> Result<Vec<BruteSolution>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut branches = vec![Branch { tower: tw.clone(), y: PuiseuxTruncation::exact(n, 0, vec![y0.clone()]), free: vec![] }];
        for j in 1..=n_terms as i64 {
            let mut next = Vec::new();
            for b in &branches {
                next.extend(b.tower.branch(&|tw: &Tower| step(f, &b.on(tw), j, h, sign))?);
            }
            if next.len() > MAX_BRANCHES {
                return Err(Error::Precondition("too many branches".into()));
            }
            branches = next;
        }
        for b in branches {
            let done = b.tower.branch(&|tw: &Tower| {
                let b = b.on(tw);
                let coeffs: Vec<Alg> = (0..=n_terms as i64).map(|j| b.y.coeff(j)).collect();
                let s = PuiseuxTruncation::new(n, 0, coeffs, Some(n_terms as i64 + 1)).reduce_ramification(tw)?;
                Ok(vec![BruteSolution { tower: b.tower, ramification: n, series: s, free: b.free }])
            })?;
            out.extend(done.into_iter().filter(|s| s.series.ram_index() == n));
        }
    }
    Ok(out)
}

//! Power series solutions `z(t) = sum_{m>=1} z_m t^m` of
//! `g(t, z) t z' = f(t, z)` with `g(0,0) != 0` and `f(0,0) = 0`.

use crate::algnum::{Alg, Tower};
use crate::error::{Error, Result};
use crate::poly::BivPoly;
use crate::series::PuiseuxTruncation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BriotKind {
    Unique,
    /// `z_index` is the free parameter `param` of the output tower.
    Family { index: u32, param: usize },
    Empty,
}

#[derive(Clone, Debug)]
pub struct BriotSolution {
    pub kind: BriotKind,
    pub tower: Tower,
    /// `z_1, ..., z_N` (empty for [`BriotKind::Empty`]).
    pub coeffs: Vec<Alg>,
}

impl BriotSolution {
    /// `z(t)` known modulo `t^(N+1)`.
    pub fn series(&self) -> PuiseuxTruncation {
        PuiseuxTruncation::new(1, 1, self.coeffs.clone(), Some(self.coeffs.len() as i64 + 1))
    }
}

/// `f_z(0,0) / g(0,0)`.
pub fn lambda(tw: &Tower, g: &BivPoly, f: &BivPoly) -> Result<Alg> {
    tw.div(&f.coeff(0, 1), &g.coeff(0, 0))
}

/// Solves for `z_1..z_N`. Both polynomials are read in `(t, z)` with `t` in
/// the first slot. Only terms of total degree at most `N` are used. When
/// `m - lambda` vanishes for some `m <= N` either the compatibility value
/// is nonzero (no solution) or `z_m` becomes a fresh parameter.
pub fn solve_briot(tw: &Tower, g: &BivPoly, f: &BivPoly, n: usize) -> Result<BriotSolution> {
    let g00 = tw.reduce(&g.coeff(0, 0));
    if tw.is_zero(&g00)? {
        return Err(Error::Precondition("g(0,0) must be nonzero".into()));
    }
    if !tw.is_zero(&f.coeff(0, 0))? {
        return Err(Error::Precondition("f(0,0) must vanish".into()));
    }
    let lam = lambda(tw, g, f)?;
    let mut tw = tw.clone();
    let mut kind = BriotKind::Unique;
    let dz = g.deg_p().max(f.deg_p()) as usize;
    let keep = |(&(a, j), _): (&(u32, u32), &Alg)| (a + j) as usize <= n;
    let gt: Vec<((u32, u32), Alg)> = g.terms().filter(|x| keep(*x)).map(|(k, c)| (*k, c.clone())).collect();
    let ft: Vec<((u32, u32), Alg)> = f.terms().filter(|x| keep(*x)).map(|(k, c)| (*k, c.clone())).collect();
    // pw[j][e] = [t^e] z^j; gs[u] = [t^u] g(t, z)
    let mut pw: Vec<Vec<Alg>> = vec![vec![Alg::zero(); n + 1]; dz + 1];
    pw[0][0] = Alg::one();
    let mut z: Vec<Alg> = vec![Alg::zero(); n + 1];
    let mut gs: Vec<Alg> = vec![Alg::zero(); n + 1];
    let coeff_at = |terms: &[((u32, u32), Alg)], pw: &[Vec<Alg>], tw: &Tower, m: usize| {
        let mut acc = Alg::zero();
        for ((a, j), c) in terms {
            let (a, j) = (*a as usize, *j as usize);
            if a <= m && !pw[j][m - a].is_literal_zero() {
                acc.add_assign(&c.mul_raw(&pw[j][m - a]));
            }
        }
        tw.reduce(&acc)
    };
    gs[0] = g00.clone();
    for m in 1..=n {
        for j in 2..=dz.min(m) {
            let mut acc = Alg::zero();
            // z = O(t), so [t^e] z^(j-1) vanishes for e < j - 1
            for i in 1..=(m + 1 - j) {
                if !z[i].is_literal_zero() && !pw[j - 1][m - i].is_literal_zero() {
                    acc.add_assign(&z[i].mul_raw(&pw[j - 1][m - i]));
                }
            }
            pw[j][m] = tw.reduce(&acc);
        }
        // c_m = [t^m](g t z' - f) with z_m = 0
        let mut lhs = Alg::zero();
        for e in 1..m {
            if !z[e].is_literal_zero() {
                lhs.add_assign(&gs[m - e].mul_raw(&z[e].scale_int(e as i64)));
            }
        }
        let cm = tw.reduce(&lhs.sub(&coeff_at(&ft, &pw, &tw, m)));
        let d = tw.reduce(&Alg::from_int(m as i64).sub(&lam));
        let zm = if tw.is_zero(&d)? {
            if !tw.is_zero(&cm)? {
                return Ok(BriotSolution { kind: BriotKind::Empty, tower: tw, coeffs: vec![] });
            }
            let name = format!("c{}", tw.params().len() + 1);
            let (t2, c) = tw.with_param(&name);
            tw = t2;
            kind = BriotKind::Family { index: m as u32, param: tw.params().len() - 1 };
            c
        } else {
            tw.mul(&cm.neg(), &tw.inv(&tw.mul(&g00, &d))?)
        };
        z[m] = zm.clone();
        pw[1][m] = zm;
        gs[m] = tw.reduce(&coeff_at(&gt, &pw, &tw, m));
    }
    Ok(BriotSolution { kind, tower: tw, coeffs: z[1..].to_vec() })
}

/// `[t^m](g(t,z) t z' - f(t,z))` for `m <= N`, as a truncation known modulo
/// `t^(N+1)`.
pub fn residual(tw: &Tower, g: &BivPoly, f: &BivPoly, z: &PuiseuxTruncation) -> PuiseuxTruncation {
    use crate::series::substitute_into;
    let t = PuiseuxTruncation::monomial(1, 1, Alg::one());
    let tzp = z.derivative().shift(1);
    let lhs = substitute_into(tw, g, &t, z).mul(tw, &tzp);
    lhs.sub(&substitute_into(tw, f, &t, z))
}

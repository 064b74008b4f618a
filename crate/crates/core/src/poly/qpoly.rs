//! Dense polynomials over the rationals and polynomials in `p` with
//! coefficients in `Q[y]`, used for the eliminants of the input equation.

use num_traits::{One, Zero};

use crate::algnum::Rational;

pub type QPoly = Vec<Rational>;
/// Polynomial in `p` whose coefficients are polynomials in `y`.
pub type QyPoly = Vec<QPoly>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn trim_y(mut p: QyPoly) -> QyPoly {
    for c in p.iter_mut() {
        *c = trim(std::mem::take(c));
    }
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
    p
}

pub fn add(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()).collect())
}

pub fn neg(a: &[Rational]) -> QPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    add(a, &neg(b))
}

pub fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn pow(a: &[Rational], e: u32) -> QPoly {
    (0..e).fold(vec![Rational::one()], |acc, _| mul(&acc, a))
}

pub fn scale(a: &[Rational], c: &Rational) -> QPoly {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn derivative(a: &[Rational]) -> QPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
}

pub fn div_rem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], r);
    }
    let lb = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lb;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn monic(a: &[Rational]) -> QPoly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(lc) => {
            let inv = Rational::one() / lc;
            scale(&a, &inv)
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn squarefree(a: &[Rational]) -> QPoly {
    let a = monic(a);
    if a.len() <= 2 {
        return a;
    }
    let g = gcd(&a, &derivative(&a));
    monic(&div_rem(&a, &g).0)
}

pub fn is_const(a: &[Rational]) -> bool {
    trim(a.to_vec()).len() <= 1
}

// --- polynomials in p over Q[y] ---

pub fn y_content(f: &QyPoly) -> QPoly {
    f.iter().fold(vec![], |g, c| if g.is_empty() { monic(c) } else { gcd(&g, c) })
}

pub fn y_divide(f: &QyPoly, d: &[Rational]) -> QyPoly {
    trim_y(f.iter().map(|c| div_rem(c, d).0).collect())
}

fn ymul(f: &QyPoly, c: &[Rational]) -> QyPoly {
    trim_y(f.iter().map(|x| mul(x, c)).collect())
}

fn ysub(a: &QyPoly, b: &QyPoly) -> QyPoly {
    let n = a.len().max(b.len());
    trim_y((0..n).map(|i| sub(a.get(i).map_or(&[][..], |v| v), b.get(i).map_or(&[][..], |v| v))).collect())
}

fn shift(f: &QyPoly, k: usize) -> QyPoly {
    let mut out = vec![vec![]; k];
    out.extend(f.iter().cloned());
    out
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` in `Q[y][p]`.
pub fn prem(a: &QyPoly, b: &QyPoly) -> QyPoly {
    let b = trim_y(b.clone());
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = trim_y(a.clone());
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - db;
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let k = r.len() - 1 - db;
        r = ysub(&ymul(&r, &lb), &shift(&ymul(&b, &lr), k));
        e -= 1;
    }
    for _ in 0..e {
        r = ymul(&r, &lb);
    }
    r
}

fn primitive(f: &QyPoly) -> QyPoly {
    let c = y_content(f);
    if c.is_empty() {
        return f.clone();
    }
    y_divide(f, &c)
}

/// Gcd in `Q[y][p]` by primitive remainder sequences, normalised to a monic
/// leading coefficient in `y`.
pub fn gcd_y(a: &QyPoly, b: &QyPoly) -> QyPoly {
    let (a, b) = (trim_y(a.clone()), trim_y(b.clone()));
    if a.is_empty() {
        return normalize(&b);
    }
    if b.is_empty() {
        return normalize(&a);
    }
    let cont = gcd(&y_content(&a), &y_content(&b));
    let (mut a, mut b) = (primitive(&a), primitive(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    normalize(&ymul(&primitive(&a), &cont))
}

fn normalize(f: &QyPoly) -> QyPoly {
    match f.last().and_then(|c| c.last()) {
        None => f.clone(),
        Some(lc) => {
            let inv = Rational::one() / lc;
            trim_y(f.iter().map(|c| scale(c, &inv)).collect())
        }
    }
}

pub fn div_exact_y(a: &QyPoly, b: &QyPoly) -> QyPoly {
    let b = trim_y(b.clone());
    let db = b.len() - 1;
    let mut r = trim_y(a.clone());
    if r.len() <= db {
        return vec![];
    }
    let mut q = vec![vec![]; r.len() - db];
    for i in (0..q.len()).rev() {
        let lr = r.get(i + db).cloned().unwrap_or_default();
        let (c, rem) = div_rem(&lr, &b[db]);
        debug_assert!(rem.is_empty(), "inexact division in Q[y][p]");
        if !c.is_empty() {
            r = ysub(&r, &shift(&ymul(&b, &c), i));
        }
        q[i] = c;
    }
    trim_y(q)
}

/// Resultant with respect to `p` by the subresultant algorithm over `Q[y]`.
pub fn resultant(a: &QyPoly, b: &QyPoly) -> QPoly {
    let (mut a, mut b) = (trim_y(a.clone()), trim_y(b.clone()));
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut s = Rational::one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = -s;
        }
    }
    let mut g: QPoly = vec![Rational::one()];
    let mut h: QPoly = vec![Rational::one()];
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if db == 0 {
            // h^(1 - da) * lc(b)^da
            let lb = b[0].clone();
            if da == 0 {
                return scale(&[Rational::one()], &s);
            }
            let num = pow(&lb, da as u32);
            let den = pow(&h, da as u32 - 1);
            return scale(&div_rem(&num, &den).0, &s);
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return vec![];
        }
        let den = mul(&g, &pow(&h, delta as u32));
        a = b;
        b = y_divide(&r, &den);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            div_rem(&pow(&g, delta as u32), &pow(&h, delta as u32 - 1)).0
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::rational::rat;

    fn q(v: &[i64]) -> QPoly {
        trim(v.iter().map(|&n| rat(n, 1)).collect())
    }

    /// Sylvester-matrix determinant over Q for fixed y values, used to check
    /// the subresultant route pointwise.
    fn sylvester_at(a: &QyPoly, b: &QyPoly, y: &Rational) -> Rational {
        let ev = |f: &QyPoly| -> Vec<Rational> { f.iter().map(|c| crate::algnum::rational::eval(c, y)).collect() };
        let (av, bv) = (ev(a), ev(b));
        let (m, n) = (av.len() - 1, bv.len() - 1);
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for i in 0..n {
            for (j, c) in av.iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in bv.iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        det(mat)
    }

    fn det(mut m: Vec<Vec<Rational>>) -> Rational {
        let n = m.len();
        let mut d = Rational::one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Rational::zero() };
            if piv != c {
                m.swap(piv, c);
                d = -d;
            }
            d *= m[c][c].clone();
            for r in c + 1..n {
                let f = &m[r][c] / &m[c][c];
                for k in c..n {
                    let t = &f * &m[c][k];
                    m[r][k] -= t;
                }
            }
        }
        d
    }

    #[test]
    fn resultant_of_parabola_and_its_derivative() {
        // F = p^2 - 4y, F_p = 2p: det [[1,0,-4y],[2,0,0],[0,2,0]] = -16y
        let f: QyPoly = vec![q(&[0, -4]), q(&[]), q(&[1])];
        let fp: QyPoly = vec![q(&[]), q(&[2])];
        assert_eq!(resultant(&f, &fp), q(&[0, -16]));
    }

    #[test]
    fn resultant_matches_sylvester_pointwise() {
        // F = ((p-1)^2 + y^2)^3 - 4 (p-1)^2 y^2 style cubic instance, kept small
        let a: QyPoly = vec![q(&[1, 0, 1]), q(&[0, 3]), q(&[-2]), q(&[1])];
        let b: QyPoly = vec![q(&[0, 1, 0, 2]), q(&[5]), q(&[0, 1])];
        let r = resultant(&a, &b);
        for yv in [-3i64, -1, 0, 2, 5] {
            let y = rat(yv, 1);
            assert_eq!(crate::algnum::rational::eval(&r, &y), sylvester_at(&a, &b, &y), "y = {yv}");
        }
    }

    #[test]
    fn bivariate_gcd() {
        // (p - y)(p + 1) and (p - y)(y + 2)
        let a: QyPoly = vec![q(&[0, -1]), q(&[1, -1]), q(&[1])];
        let b: QyPoly = vec![q(&[0, -2, -1]), q(&[2, 1])];
        assert_eq!(gcd_y(&a, &b), vec![q(&[0, -1]), q(&[1])]);
    }
}

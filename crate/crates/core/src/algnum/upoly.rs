//! Univariate polynomials (coefficients low to high) over a tower.
//!
//! Every routine that needs to know whether a coefficient vanishes or to
//! invert one goes through the tower and may fail with a split.

use super::{Alg, Tower};
use crate::error::Result;

pub fn trim(tw: &Tower, p: &[Alg]) -> Result<Vec<Alg>> {
    let mut p: Vec<Alg> = p.iter().map(|c| tw.reduce(c)).collect();
    while let Some(last) = p.last() {
        if tw.is_zero(last)? {
            p.pop();
        } else {
            break;
        }
    }
    Ok(p)
}

/// Degree of an already trimmed polynomial (`None` for zero).
pub fn degree(p: &[Alg]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add(a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            _ => unreachable!(),
        })
        .collect()
}

pub fn sub(a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    add(a, &b.iter().map(Alg::neg).collect::<Vec<_>>())
}

pub fn mul(tw: &Tower, a: &[Alg], b: &[Alg]) -> Vec<Alg> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Alg::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_literal_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_literal_zero() {
                out[i + j].add_assign(&x.mul_raw(y));
            }
        }
    }
    out.iter().map(|c| tw.reduce(c)).collect()
}

pub fn scale(tw: &Tower, p: &[Alg], c: &Alg) -> Vec<Alg> {
    p.iter().map(|x| tw.mul(x, c)).collect()
}

pub fn derivative(p: &[Alg]) -> Vec<Alg> {
    p.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i64)).collect()
}

pub fn eval(tw: &Tower, p: &[Alg], x: &Alg) -> Alg {
    p.iter().rev().fold(Alg::zero(), |acc, c| tw.mul(&acc, x).add(c))
}

/// Nonzero polynomial scaled to leading coefficient one.
pub fn monic(tw: &Tower, p: &[Alg]) -> Result<Vec<Alg>> {
    let p = trim(tw, p)?;
    match p.last() {
        None => Ok(p),
        Some(lc) => {
            let inv = tw.inv(lc)?;
            let mut out = scale(tw, &p, &inv);
            *out.last_mut().unwrap() = Alg::one();
            Ok(out)
        }
    }
}

pub fn div_rem(tw: &Tower, a: &[Alg], b: &[Alg]) -> Result<(Vec<Alg>, Vec<Alg>)> {
    let b = trim(tw, b)?;
    let db = degree(&b).ok_or(crate::error::Error::ZeroDivisor)?;
    let inv_lc = tw.inv(b.last().unwrap())?;
    let mut r = trim(tw, a)?;
    if r.len() <= db {
        return Ok((vec![], r));
    }
    let mut q = vec![Alg::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = tw.mul(&r[i + db], &inv_lc);
        if !c.is_literal_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = r[i + j].sub(&tw.mul(&c, bj));
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    Ok((q, trim(tw, &r)?))
}

pub fn rem(tw: &Tower, a: &[Alg], b: &[Alg]) -> Result<Vec<Alg>> {
    Ok(div_rem(tw, a, b)?.1)
}

pub fn div_exact(tw: &Tower, a: &[Alg], b: &[Alg]) -> Result<Vec<Alg>> {
    Ok(div_rem(tw, a, b)?.0)
}

/// Monic gcd (`[1]` when coprime, empty when both inputs vanish).
pub fn gcd(tw: &Tower, a: &[Alg], b: &[Alg]) -> Result<Vec<Alg>> {
    let mut a = trim(tw, a)?;
    let mut b = trim(tw, b)?;
    while !b.is_empty() {
        let r = rem(tw, &a, &b)?;
        a = b;
        b = r;
    }
    monic(tw, &a)
}

/// Monic `g = gcd(a, b)` with Bezout cofactors `s*a + t*b = g`.
pub fn ext_gcd(tw: &Tower, a: &[Alg], b: &[Alg]) -> Result<(Vec<Alg>, Vec<Alg>, Vec<Alg>)> {
    let (mut r0, mut r1) = (trim(tw, a)?, trim(tw, b)?);
    let (mut s0, mut s1) = (vec![Alg::one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![Alg::one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(tw, &r0, &r1)?;
        let s2 = sub(&s0, &mul(tw, &q, &s1));
        let t2 = sub(&t0, &mul(tw, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_empty() {
        return Ok((r0, s0, t0));
    }
    let inv = tw.inv(r0.last().unwrap())?;
    let g = monic(tw, &r0)?;
    Ok((g, trim(tw, &scale(tw, &s0, &inv))?, trim(tw, &scale(tw, &t0, &inv))?))
}

/// Monic squarefree part `p / gcd(p, p')`.
pub fn squarefree(tw: &Tower, p: &[Alg]) -> Result<Vec<Alg>> {
    let p = monic(tw, p)?;
    if p.len() <= 2 {
        return Ok(p);
    }
    let g = gcd(tw, &p, &derivative(&p))?;
    if g.len() <= 1 {
        return Ok(p);
    }
    monic(tw, &div_exact(tw, &p, &g)?)
}

/// Yun's squarefree decomposition: monic pairwise coprime factors with
/// their multiplicities, `p = lc * prod f_i^{m_i}`.
pub fn squarefree_decomposition(tw: &Tower, p: &[Alg]) -> Result<Vec<(Vec<Alg>, usize)>> {
    let p = monic(tw, p)?;
    let mut out = Vec::new();
    if p.len() <= 1 {
        return Ok(out);
    }
    let dp = derivative(&p);
    let a0 = gcd(tw, &p, &dp)?;
    let mut b = div_exact(tw, &p, &a0)?;
    let mut c = div_exact(tw, &dp, &a0)?;
    let mut d = trim(tw, &sub(&c, &derivative(&b)))?;
    let mut i = 1;
    loop {
        let a = gcd(tw, &b, &d)?;
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = div_exact(tw, &b, &a)?;
        if b.len() <= 1 {
            break;
        }
        c = div_exact(tw, &d, &a)?;
        d = trim(tw, &sub(&c, &derivative(&b)))?;
        i += 1;
    }
    Ok(out)
}

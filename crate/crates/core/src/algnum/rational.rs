//! Helpers for univariate polynomials with rational coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Exact division by the monic linear factor `X - r`; remainder discarded.
fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = p.len() - 1;
    let mut q = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * r;
        q[i] = carry.clone();
    }
    q
}

/// Positive divisors of `n`, or `None` when `n` is too large to factor by
/// trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational roots of `p` (each listed once, ascending) and the cofactor left
/// after dividing them out. Roots are only searched when the constant and
/// leading coefficients are small enough to enumerate divisors.
pub fn rational_roots(p: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut p = p.to_vec();
    trim(&mut p);
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return (roots, p);
    }
    if p[0].is_zero() {
        roots.push(Rational::zero());
        while p.len() > 1 && p[0].is_zero() {
            p.remove(0);
        }
    }
    let den_lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();
    let lead = ints.last().unwrap().clone();
    let tail = ints[0].clone();
    if let (Some(dn), Some(dd)) = (divisors(&tail), divisors(&lead)) {
        let mut cands: Vec<Rational> = Vec::new();
        for a in &dn {
            for b in &dd {
                let r = Rational::new(a.clone(), b.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        for r in cands {
            if p.len() <= 1 {
                break;
            }
            if eval(&p, &r).is_zero() {
                roots.push(r.clone());
                while p.len() > 1 && eval(&p, &r).is_zero() {
                    p = deflate(&p, &r);
                }
            }
        }
    }
    roots.sort();
    (roots, p)
}

/// Exact `n`-th root of a rational number when it exists.
pub fn exact_root(x: &Rational, n: u32) -> Option<Rational> {
    if x.is_zero() {
        return Some(Rational::zero());
    }
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().nth_root(n);
        (num_traits::pow(r.clone(), n as usize) == v.abs()).then(|| if v.is_negative() { -r } else { r })
    };
    let num = root_int(x.numer())?;
    let den = root_int(x.denom())?;
    Some(Rational::new(num, den))
}

/// The `n`-th cyclotomic polynomial, coefficients low to high.
pub fn cyclotomic(n: u32) -> Vec<Rational> {
    assert!(n >= 1);
    let mut p = vec![Rational::zero(); n as usize + 1];
    p[0] = -Rational::one();
    p[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let q = cyclotomic(d);
            p = divide_exact(&p, &q);
        }
    }
    p
}

fn divide_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lb;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| rat(n, 1)).collect()
    }

    #[test]
    fn finds_rational_roots() {
        // (x - 2)(x + 2)(x^2 + 1) = x^4 - 3x^2 - 4
        let (roots, rest) = rational_roots(&ints(&[-4, 0, -3, 0, 1]));
        assert_eq!(roots, vec![rat(-2, 1), rat(2, 1)]);
        assert_eq!(rest, ints(&[1, 0, 1]));
        // 2x - 1 and a repeated zero root
        let (roots, rest) = rational_roots(&ints(&[0, 0, -1, 2]));
        assert_eq!(roots, vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(rest.len(), 1);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(exact_root(&rat(-8, 1), 3), Some(rat(-2, 1)));
        assert_eq!(exact_root(&rat(2, 1), 2), None);
        assert_eq!(exact_root(&rat(-1, 1), 2), None);
    }
}

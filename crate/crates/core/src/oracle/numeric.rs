//! High-precision complex evaluation of tower elements and truncations.

use astro_float::{BigFloat, RoundingMode};
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::algnum::{Alg, Rational, Tower};
use crate::poly::BivPoly;
use crate::series::PuiseuxTruncation;

const RM: RoundingMode = RoundingMode::ToEven;

fn big_int(n: &BigInt, p: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let base = BigFloat::from_u128(1u128 << 64, p);
    let mut acc = BigFloat::from_u64(0, p);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
    }
    if sign == Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

pub fn big_rational(r: &Rational, p: usize) -> BigFloat {
    big_int(r.numer(), p).div(&big_int(r.denom(), p), p, RM)
}

/// Complex number with `p` bits of precision.
#[derive(Clone, Debug)]
pub struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
    p: usize,
}

impl Cx {
    pub fn zero(p: usize) -> Cx {
        Cx { re: BigFloat::from_u64(0, p), im: BigFloat::from_u64(0, p), p }
    }

    pub fn real(re: BigFloat, p: usize) -> Cx {
        Cx { re, im: BigFloat::from_u64(0, p), p }
    }

    pub fn from_rational(r: &Rational, p: usize) -> Cx {
        Cx::real(big_rational(r, p), p)
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: self.re.add(&o.re, self.p, RM), im: self.im.add(&o.im, self.p, RM), p: self.p }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx { re: self.re.sub(&o.re, self.p, RM), im: self.im.sub(&o.im, self.p, RM), p: self.p }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        let p = self.p;
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Cx { re, im, p }
    }

    pub fn scale(&self, r: &BigFloat) -> Cx {
        Cx { re: self.re.mul(r, self.p, RM), im: self.im.mul(r, self.p, RM), p: self.p }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.mul(&self.re, self.p, RM).add(&self.im.mul(&self.im, self.p, RM), self.p, RM)
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sqr();
        let conj = Cx { re: o.re.clone(), im: o.im.neg(), p: self.p };
        let num = self.mul(&conj);
        Cx { re: num.re.div(&d, self.p, RM), im: num.im.div(&d, self.p, RM), p: self.p }
    }

    pub fn pow(&self, e: u32) -> Cx {
        let mut acc = Cx::real(BigFloat::from_u64(1, self.p), self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Real and imaginary parts rounded to `f64`.
    pub fn approx(&self) -> (f64, f64) {
        let f = |x: &BigFloat| x.to_string().parse::<f64>().map_or(f64::NAN, |v| if v == 0.0 { 0.0 } else { v });
        (f(&self.re), f(&self.im))
    }

    /// `log2 |z|` rounded up, `None` for zero.
    pub fn log2_abs(&self) -> Option<i64> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        n.exponent().map(|e| (e as i64 + 1) / 2)
    }

    /// `log10 |z|` as an upper estimate (`-inf` for zero).
    pub fn log10_abs(&self) -> f64 {
        self.log2_abs().map_or(f64::NEG_INFINITY, |e| e as f64 * std::f64::consts::LOG10_2)
    }
}

/// `x` under the embedding sending generator `i` to `gens[i]` and parameter
/// `j` to `params[j]`.
pub fn eval_alg(x: &Alg, gens: &[Cx], params: &[Cx], p: usize) -> Cx {
    let mut acc = Cx::zero(p);
    for (m, c) in x.terms() {
        let mut t = Cx::from_rational(c, p);
        for (i, e) in m.gens.iter().enumerate() {
            t = t.mul(&gens[i].pow(*e));
        }
        for (i, e) in m.params.iter().enumerate() {
            t = t.mul(&params[i].pow(*e));
        }
        acc = acc.add(&t);
    }
    acc
}

/// All roots of a squarefree polynomial (coefficients low to high) by
/// simultaneous Weierstrass iteration.
pub fn poly_roots(coeffs: &[Cx], p: usize) -> Vec<Cx> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].clone();
    let monic: Vec<Cx> = coeffs.iter().map(|c| c.div(&lead)).collect();
    let eval = |z: &Cx| monic.iter().rev().fold(Cx::zero(p), |acc, c| acc.mul(z).add(c));
    let seed = Cx { re: BigFloat::from_f64(0.4, p), im: BigFloat::from_f64(0.9, p), p };
    let mut bound = BigFloat::from_u64(1, p);
    for c in &monic[..d] {
        let a = c.norm_sqr().sqrt(p, RM);
        bound = bound.add(&a, p, RM);
    }
    let mut roots: Vec<Cx> = (0..d).map(|k| seed.pow(k as u32 + 1).scale(&bound)).collect();
    let tol = -(p as i64) + 16;
    for _ in 0..2000 {
        let mut worst = i64::MIN;
        for i in 0..d {
            let mut den = Cx::real(BigFloat::from_u64(1, p), p);
            for j in 0..d {
                if i != j {
                    den = den.mul(&roots[i].sub(&roots[j]));
                }
            }
            let delta = eval(&roots[i]).div(&den);
            worst = worst.max(delta.log2_abs().unwrap_or(i64::MIN));
            roots[i] = roots[i].sub(&delta);
        }
        if worst < tol {
            break;
        }
    }
    roots
}

/// Every complex embedding of the tower's generators, level by level.
pub fn embeddings(tw: &Tower, p: usize) -> Vec<Vec<Cx>> {
    let mut out: Vec<Vec<Cx>> = vec![vec![]];
    for lvl in tw.levels() {
        let mut next = Vec::new();
        for e in &out {
            let coeffs: Vec<Cx> = lvl.defpoly.iter().map(|c| eval_alg(c, e, &[], p)).collect();
            for r in poly_roots(&coeffs, p) {
                let mut v = e.clone();
                v.push(r);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `(x^(1/n))` for a positive rational `x`, by Newton's method.
fn real_root(x: &Rational, n: u32, p: usize) -> BigFloat {
    let xf = big_rational(x, p);
    if n == 1 {
        return xf;
    }
    let approx = num_traits::ToPrimitive::to_f64(x).unwrap_or(1.0).powf(1.0 / n as f64);
    let mut t = BigFloat::from_f64(approx, p);
    let nf = BigFloat::from_u64(n as u64, p);
    let nm1 = BigFloat::from_u64(n as u64 - 1, p);
    for _ in 0..(p.ilog2() as usize + 8) {
        let tn1 = t.powi(n as usize - 1, p, RM);
        t = nm1.mul(&t, p, RM).add(&xf.div(&tn1, p, RM), p, RM).div(&nf, p, RM);
    }
    t
}

/// `(y(x0), y'(x0))` for the truncation read as a finite sum.
pub fn eval_series(s: &PuiseuxTruncation, gens: &[Cx], params: &[Cx], x0: &Rational, p: usize) -> (Cx, Cx) {
    let n = s.ram_index();
    let t = Cx::real(real_root(x0, n, p), p);
    let tinv = Cx::real(BigFloat::from_u64(1, p), p).div(&t);
    let tp = |j: i64| if j >= 0 { t.pow(j as u32) } else { tinv.pow((-j) as u32) };
    let mut y = Cx::zero(p);
    let mut dy = Cx::zero(p);
    for (j, c) in s.terms() {
        if c.is_literal_zero() {
            continue;
        }
        let cv = eval_alg(c, gens, params, p);
        y = y.add(&cv.mul(&tp(j)));
        if j != 0 {
            let f = Cx::from_rational(&Rational::new(j.into(), (n as i64).into()), p);
            dy = dy.add(&cv.mul(&f).mul(&tp(j - n as i64)));
        }
    }
    (y, dy)
}

pub fn eval_biv(f: &BivPoly, y: &Cx, q: &Cx, p: usize) -> Cx {
    let mut acc = Cx::zero(p);
    for (&(i, j), c) in f.terms() {
        let c = c.as_rational().expect("rational equation");
        acc = acc.add(&Cx::from_rational(&c, p).mul(&y.pow(i)).mul(&q.pow(j)));
    }
    acc
}

#[derive(Clone, Debug)]
pub struct NumericReport {
    /// Upper estimate of `log10 |F|`, maximized over embeddings.
    pub log10_abs: f64,
    pub embeddings: usize,
}

/// `|F(y(x0), sign x0^h y'(x0))|` over every embedding of the tower, with
/// free parameters set to `param_value`. Reports the largest value.
pub fn numeric_check(
    f: &BivPoly,
    y: &PuiseuxTruncation,
    tw: &Tower,
    h: u32,
    sign: i64,
    x0: &Rational,
    digits: u32,
    param_value: &Rational,
) -> NumericReport {
    assert!(x0.is_positive() && !x0.is_zero());
    let p = (digits as f64 / std::f64::consts::LOG10_2).ceil() as usize + 64;
    let embs = embeddings(tw, p);
    let params: Vec<Cx> = tw.params().iter().map(|_| Cx::from_rational(param_value, p)).collect();
    let xh = Cx::from_rational(&(num_traits::pow(x0.clone(), h as usize) * Rational::from_integer(sign.into())), p);
    let mut worst = f64::NEG_INFINITY;
    for e in &embs {
        let (yv, dy) = eval_series(y, e, &params, x0, p);
        let r = eval_biv(f, &yv, &xh.mul(&dy), p);
        worst = worst.max(r.log10_abs());
    }
    NumericReport { log10_abs: worst, embeddings: embs.len() }
}

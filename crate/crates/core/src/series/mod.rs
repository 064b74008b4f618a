//! Truncated Puiseux series `sum a_j x^(j/n)`, stored in the local variable
//! `t = x^(1/n)` with integer exponents and an explicit precision.

mod compose;
mod display;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::algnum::{Alg, Rational, Tower};
use crate::error::{Error, Result};
use crate::poly::BivPoly;
pub use compose::{compose, compositional_inverse};
pub use display::{SeriesJson, TermJson};

/// `sum_{j >= low} coeffs[j - low] t^j + O(t^known)`. `known == None`
/// marks an exact (finite) series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxTruncation {
    n: u32,
    low: i64,
    coeffs: Vec<Alg>,
    known: Option<i64>,
}

/// Order of a truncation in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Exact(Rational),
    /// All known coefficients vanish; the order is at least this.
    AtLeast(Rational),
    /// The exact zero series.
    Infinite,
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Order::Exact(q) => write!(f, "{q}"),
            Order::AtLeast(q) => write!(f, ">= {q}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

fn frac(a: i64, b: u32) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

impl PuiseuxTruncation {
    /// Coefficients `coeffs[i]` of `t^(low + i)`, known modulo `t^known`.
    pub fn new(n: u32, low: i64, coeffs: Vec<Alg>, known: Option<i64>) -> Self {
        assert!(n >= 1);
        let mut s = PuiseuxTruncation { n, low, coeffs, known };
        if let Some(k) = known {
            let keep = (k - low).max(0) as usize;
            s.coeffs.truncate(keep);
        }
        s.trim_literal();
        s
    }

    pub fn exact(n: u32, low: i64, coeffs: Vec<Alg>) -> Self {
        PuiseuxTruncation::new(n, low, coeffs, None)
    }

    pub fn zero(n: u32, known: Option<i64>) -> Self {
        PuiseuxTruncation::new(n, 0, vec![], known)
    }

    pub fn constant(c: Alg) -> Self {
        PuiseuxTruncation::exact(1, 0, vec![c])
    }

    /// `c t^j` (exact).
    pub fn monomial(n: u32, j: i64, c: Alg) -> Self {
        PuiseuxTruncation::exact(n, j, vec![c])
    }

    /// Drops literally zero coefficients at both ends.
    fn trim_literal(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_literal_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = self.known.unwrap_or(0);
            return;
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        while self.coeffs.last().is_some_and(Alg::is_literal_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ram_index(&self) -> u32 {
        self.n
    }

    /// Least stored exponent (a lower bound for the valuation in `t`).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Precision in `t`: the series is known modulo `t^known`.
    pub fn known_order(&self) -> Option<i64> {
        self.known
    }

    pub fn is_exact(&self) -> bool {
        self.known.is_none()
    }

    /// Exclusive upper end of the stored exponents.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    pub fn coeff(&self, j: i64) -> Alg {
        if j < self.low {
            return Alg::zero();
        }
        self.coeffs.get((j - self.low) as usize).cloned().unwrap_or_default()
    }

    /// `(exponent in t, coefficient)` for every stored nonzero term.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Alg)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_literal_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn is_literal_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Precision after combining with another operand.
    fn min_known(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Caps the precision at `t^k`.
    pub fn truncate(&self, k: i64) -> Self {
        let known = Self::min_known(self.known, Some(k));
        PuiseuxTruncation::new(self.n, self.low, self.coeffs.clone(), known)
    }

    /// Re-expresses the series with ramification index `m` (a multiple of n).
    pub fn with_ram_index(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.n), "ramification index must be a multiple");
        let f = (m / self.n) as i64;
        if f == 1 {
            return self.clone();
        }
        let mut coeffs = vec![Alg::zero(); (self.coeffs.len().max(1) - 1) * f as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * f as usize] = c.clone();
        }
        PuiseuxTruncation::new(m, self.low * f, coeffs, self.known.map(|k| k * f))
    }

    /// Both operands lifted to the lcm of their ramification indices.
    pub fn align(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.n.lcm(&b.n);
        (a.with_ram_index(m), b.with_ram_index(m))
    }

    /// Canonical coefficients, with the leading coefficient zero-tested.
    pub fn normalize(&self, tw: &Tower) -> Result<Self> {
        let mut coeffs: Vec<Alg> = self.coeffs.iter().map(|c| tw.reduce(c)).collect();
        let mut low = self.low;
        while let Some(c) = coeffs.first() {
            if tw.is_zero(c)? {
                coeffs.remove(0);
                low += 1;
            } else {
                break;
            }
        }
        for c in coeffs.iter_mut() {
            if !c.is_literal_zero() && tw.is_zero(c)? {
                *c = Alg::zero();
            }
        }
        Ok(PuiseuxTruncation::new(self.n, low, coeffs, self.known))
    }

    /// Valuation in `t` of the first nonzero coefficient, if any is known.
    pub fn valuation(&self, tw: &Tower) -> Result<Option<i64>> {
        for (j, c) in self.terms() {
            if !tw.is_zero(c)? {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    pub fn order(&self, tw: &Tower) -> Result<Order> {
        Ok(match self.valuation(tw)? {
            Some(j) => Order::Exact(frac(j, self.n)),
            None => match self.known {
                Some(k) => Order::AtLeast(frac(k, self.n)),
                None => Order::Infinite,
            },
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::align(self, other);
        let known = Self::min_known(a.known, b.known);
        let low = if a.is_literal_zero() {
            b.low
        } else if b.is_literal_zero() {
            a.low
        } else {
            a.low.min(b.low)
        };
        let high = a.high().max(b.high());
        let coeffs = (low..high).map(|j| a.coeff(j).add(&b.coeff(j))).collect();
        PuiseuxTruncation::new(a.n, low, coeffs, known)
    }

    pub fn neg(&self) -> Self {
        PuiseuxTruncation { coeffs: self.coeffs.iter().map(Alg::neg).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, tw: &Tower, c: &Alg) -> Self {
        PuiseuxTruncation::new(self.n, self.low, self.coeffs.iter().map(|x| tw.mul(x, c)).collect(), self.known)
    }

    /// Multiplication by `t^j`.
    pub fn shift(&self, j: i64) -> Self {
        PuiseuxTruncation::new(self.n, self.low + j, self.coeffs.clone(), self.known.map(|k| k + j))
    }

    pub fn mul(&self, tw: &Tower, other: &Self) -> Self {
        let (a, b) = Self::align(self, other);
        let known = match (a.known, b.known) {
            (None, None) => None,
            (Some(ka), None) => Some(ka + b.low),
            (None, Some(kb)) => Some(kb + a.low),
            (Some(ka), Some(kb)) => Some((ka + b.low).min(kb + a.low)),
        };
        if a.is_literal_zero() || b.is_literal_zero() {
            return PuiseuxTruncation::new(a.n, a.low + b.low, vec![], known);
        }
        let low = a.low + b.low;
        let mut len = a.coeffs.len() + b.coeffs.len() - 1;
        if let Some(k) = known {
            len = len.min((k - low).max(0) as usize);
        }
        let mut acc = vec![Alg::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_literal_zero() || i >= len {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                if !y.is_literal_zero() {
                    acc[i + j].add_assign(&x.mul_raw(y));
                }
            }
        }
        let coeffs = acc.iter().map(|c| tw.reduce(c)).collect();
        PuiseuxTruncation::new(a.n, low, coeffs, known)
    }

    pub fn pow(&self, tw: &Tower, e: u32) -> Self {
        let mut out = PuiseuxTruncation::constant(Alg::one()).with_ram_index(self.n);
        for _ in 0..e {
            out = out.mul(tw, self);
        }
        out
    }

    /// `1/s` up to relative precision `prec` terms when `s` is exact
    /// (and as far as `s` is known otherwise). The leading coefficient must
    /// be invertible.
    pub fn recip(&self, tw: &Tower, prec: i64) -> Result<Self> {
        let s = self.normalize(tw)?;
        if s.is_literal_zero() {
            return Err(Error::ZeroDivisor);
        }
        let v = s.low;
        let rel = match s.known {
            Some(k) => (k - v).min(prec),
            None => prec,
        };
        let inv0 = tw.inv(&s.coeffs[0])?;
        let mut out: Vec<Alg> = Vec::with_capacity(rel.max(0) as usize);
        for m in 0..rel.max(0) as usize {
            if m == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = Alg::zero();
            for i in 1..=m.min(s.coeffs.len() - 1) {
                acc.add_assign(&tw.mul(&s.coeffs[i], &out[m - i]));
            }
            out.push(tw.mul(&acc.neg(), &inv0));
        }
        Ok(PuiseuxTruncation::new(s.n, -v, out, Some(rel - v)))
    }

    /// Term-wise `d/dx`.
    pub fn derivative(&self) -> Self {
        let n = self.n as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&frac(self.low + i as i64, self.n)))
            .collect();
        PuiseuxTruncation::new(self.n, self.low - n, coeffs, self.known.map(|k| k - n))
    }

    /// Substitution `t -> c t`.
    pub fn rescale_var(&self, tw: &Tower, c: &Alg) -> Result<Self> {
        let base = if self.low < 0 { tw.inv(c)? } else { c.clone() };
        let mut pw = tw.pow(&base, self.low.unsigned_abs() as u32);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, x) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pw = tw.mul(&pw, c);
            }
            coeffs.push(tw.mul(x, &pw));
        }
        Ok(PuiseuxTruncation::new(self.n, self.low, coeffs, self.known))
    }

    /// Divides the ramification index by `gcd(n, support exponents)`; the
    /// smallest `n` for which the series is a series in `x^(1/n)`.
    pub fn reduce_ramification(&self, tw: &Tower) -> Result<Self> {
        let s = self.normalize(tw)?;
        let mut g = s.n as i64;
        for (j, _) in s.terms() {
            g = g.gcd(&j);
        }
        if g <= 1 {
            return Ok(s);
        }
        let coeffs = (0..s.coeffs.len()).step_by(g as usize).map(|i| s.coeffs[i].clone()).collect();
        let known = s.known.map(|k| Integer::div_ceil(&k, &g));
        Ok(PuiseuxTruncation::new(s.n / g as u32, s.low / g, coeffs, known))
    }

    /// Evaluation at a tower element `t = t0` of an exact series with
    /// nonnegative exponents.
    pub fn eval_exact(&self, tw: &Tower, t0: &Alg) -> Alg {
        let mut acc = Alg::zero();
        for (j, c) in self.terms() {
            acc.add_assign(&tw.mul(c, &tw.pow(t0, j.max(0) as u32)));
        }
        tw.reduce(&acc)
    }

    /// Whether all parameters are absent from the coefficients.
    pub fn has_params(&self) -> bool {
        self.coeffs.iter().any(Alg::has_params)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&Alg) -> Alg>(&self, f: F) -> Self {
        PuiseuxTruncation::new(self.n, self.low, self.coeffs.iter().map(f).collect(), self.known)
    }

    /// Exponent `j/n` in lowest terms.
    pub fn exponent(&self, j: i64) -> Rational {
        frac(j, self.n)
    }

    pub fn one() -> Self {
        PuiseuxTruncation::constant(Alg::one())
    }

    pub fn known_order_x(&self) -> Option<Rational> {
        self.known.map(|k| frac(k, self.n))
    }
}

/// `F(a(t), b(t))`, with both series lifted to a common ramification
/// index. The precision is propagated through every product.
pub fn substitute_into(tw: &Tower, f: &BivPoly, a: &PuiseuxTruncation, b: &PuiseuxTruncation) -> PuiseuxTruncation {
    let (a, b) = PuiseuxTruncation::align(a, b);
    let one = PuiseuxTruncation::one().with_ram_index(a.n);
    let mut apow = vec![one.clone()];
    for _ in 0..f.deg_y() {
        let next = apow.last().unwrap().mul(tw, &a);
        apow.push(next);
    }
    let mut bpow = vec![one];
    for _ in 0..f.deg_p() {
        let next = bpow.last().unwrap().mul(tw, &b);
        bpow.push(next);
    }
    let mut acc = PuiseuxTruncation::zero(a.n, None);
    for (&(i, j), c) in f.terms() {
        let term = apow[i as usize].mul(tw, &bpow[j as usize]).scale(tw, c);
        acc = acc.add(&term);
    }
    acc
}

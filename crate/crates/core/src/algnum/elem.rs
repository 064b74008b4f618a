use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// Exponent vector of a term: one entry per tower generator and one per
/// free parameter. Trailing zeros are always trimmed so that equal
/// monomials compare equal regardless of tower depth.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub gens: Vec<u32>,
    pub params: Vec<u32>,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    out
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn gen_pow(level: usize, e: u32) -> Self {
        let mut gens = vec![0; level + 1];
        gens[level] = e;
        let mut m = Mono { gens, params: vec![] };
        trim(&mut m.gens);
        m
    }

    pub fn param_pow(idx: usize, e: u32) -> Self {
        let mut params = vec![0; idx + 1];
        params[idx] = e;
        let mut m = Mono { gens: vec![], params };
        trim(&mut m.params);
        m
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono { gens: add_exps(&self.gens, &other.gens), params: add_exps(&self.params, &other.params) }
    }

    pub fn gen_exp(&self, level: usize) -> u32 {
        self.gens.get(level).copied().unwrap_or(0)
    }

    pub fn with_gen_exp(&self, level: usize, e: u32) -> Mono {
        let mut m = self.clone();
        if m.gens.len() <= level {
            m.gens.resize(level + 1, 0);
        }
        m.gens[level] = e;
        trim(&mut m.gens);
        m
    }

    pub fn is_one(&self) -> bool {
        self.gens.is_empty() && self.params.is_empty()
    }

    pub fn param_part(&self) -> Mono {
        Mono { gens: vec![], params: self.params.clone() }
    }

    pub fn gen_part(&self) -> Mono {
        Mono { gens: self.gens.clone(), params: vec![] }
    }
}

/// An element of a tower of simple extensions of the rationals, possibly
/// polynomial in free transcendental parameters.
///
/// The value itself is a plain sparse polynomial in the generators and
/// parameters; which relations hold between generators is the business of
/// the [`Tower`](super::Tower) it is interpreted in. Addition and negation
/// never need the tower, multiplication reduces through it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alg {
    pub(crate) terms: BTreeMap<Mono, Rational>,
}

impl Alg {
    pub fn zero() -> Self {
        Alg::default()
    }

    pub fn one() -> Self {
        Alg::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Mono::one(), r);
        }
        Alg { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Alg::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Alg::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The generator of tower level `level`.
    pub fn gen(level: usize) -> Self {
        Alg::monomial(Mono::gen_pow(level, 1), Rational::one())
    }

    /// The free parameter with index `idx`.
    pub fn param(idx: usize) -> Self {
        Alg::monomial(Mono::param_pow(idx, 1), Rational::one())
    }

    pub fn monomial(m: Mono, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Alg { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Structural zero; says nothing about zero divisors.
    pub fn is_literal_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    pub fn has_params(&self) -> bool {
        self.terms.keys().any(|m| !m.params.is_empty())
    }

    /// Number of generator slots touched (highest used level + 1).
    pub fn gen_span(&self) -> usize {
        self.terms.keys().map(|m| m.gens.len()).max().unwrap_or(0)
    }

    pub fn param_span(&self) -> usize {
        self.terms.keys().map(|m| m.params.len()).max().unwrap_or(0)
    }

    pub fn degree_in_gen(&self, level: usize) -> u32 {
        self.terms.keys().map(|m| m.gen_exp(level)).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Alg) -> Alg {
        let (mut big, small) = if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn add_assign(&mut self, other: &Alg) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Alg {
        Alg { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Alg) -> Alg {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Alg {
        if r.is_zero() {
            return Alg::zero();
        }
        Alg { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Alg {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    /// Product without reduction modulo defining polynomials.
    pub fn mul_raw(&self, other: &Alg) -> Alg {
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        let mut out = Alg::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Splits into coefficients of powers of generator `level`; the
    /// coefficients no longer mention that generator.
    pub fn to_univariate(&self, level: usize) -> Vec<Alg> {
        let mut out: Vec<Alg> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.gen_exp(level) as usize;
            if out.len() <= e {
                out.resize(e + 1, Alg::zero());
            }
            out[e].add_term(m.with_gen_exp(level, 0), c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[Alg], level: usize) -> Alg {
        let mut out = Alg::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, r) in &c.terms {
                out.add_term(m.with_gen_exp(level, m.gen_exp(level) + e as u32), r.clone());
            }
        }
        out
    }

    /// Groups terms by their parameter monomial; each coefficient is
    /// parameter free.
    pub fn param_coefficients(&self) -> BTreeMap<Mono, Alg> {
        let mut out: BTreeMap<Mono, Alg> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.param_part()).or_default().add_term(m.gen_part(), c.clone());
        }
        out
    }

    /// Replaces parameter `idx` by the given element (no reduction).
    pub fn substitute_param(&self, idx: usize, value: &Alg) -> Alg {
        let mut out = Alg::zero();
        let mut powers: Vec<Alg> = vec![Alg::one()];
        for (m, c) in &self.terms {
            let e = m.params.get(idx).copied().unwrap_or(0) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_raw(value);
                powers.push(next);
            }
            let mut rest = m.clone();
            if rest.params.len() > idx {
                rest.params[idx] = 0;
                trim(&mut rest.params);
            }
            let term = Alg::monomial(rest, c.clone()).mul_raw(&powers[e]);
            out.add_assign(&term);
        }
        out
    }

    /// Renders with the supplied generator and parameter names.
    pub fn display_with(&self, gen_names: &[String], param_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (lvl, e) in m.gens.iter().enumerate() {
                if *e > 0 {
                    let name = gen_names.get(lvl).cloned().unwrap_or_else(|| format!("g{lvl}"));
                    factors.push(if *e == 1 { name } else { format!("{name}^{e}") });
                }
            }
            for (idx, e) in m.params.iter().enumerate() {
                if *e > 0 {
                    let name = param_names.get(idx).cloned().unwrap_or_else(|| format!("c_{}", idx + 1));
                    factors.push(if *e == 1 { name } else { format!("{name}^{e}") });
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&factors.join("*"));
            } else {
                s.push_str(&format!("{}*{}", abs, factors.join("*")));
            }
        }
        s
    }
}

impl fmt::Display for Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[], &[]))
    }
}

impl From<i64> for Alg {
    fn from(n: i64) -> Self {
        Alg::from_int(n)
    }
}

impl From<Rational> for Alg {
    fn from(r: Rational) -> Self {
        Alg::from_rational(r)
    }
}

/// Wire form of one term: exponent vectors plus a `p/q` coefficient string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub gens: Vec<u32>,
    pub params: Vec<u32>,
    pub coeff: String,
}

impl Alg {
    pub fn to_repr(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(m, c)| TermRepr { gens: m.gens.clone(), params: m.params.clone(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_repr(repr: &[TermRepr]) -> Option<Alg> {
        let mut out = Alg::zero();
        for t in repr {
            let c: Rational = t.coeff.parse().ok()?;
            let mut m = Mono { gens: t.gens.clone(), params: t.params.clone() };
            trim(&mut m.gens);
            trim(&mut m.params);
            out.add_term(m, c);
        }
        Some(out)
    }
}

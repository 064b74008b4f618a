use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::elem::{Alg, TermRepr};
use super::rational::{cyclotomic, exact_root, rational_roots};
use super::{upoly, Rational};
use crate::error::{Error, Result, SplitInfo};

/// One simple extension: a generator and its monic defining polynomial
/// (coefficients low to high, living in the levels below).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub name: String,
    pub defpoly: Vec<Alg>,
}

#[derive(Debug, PartialEq, Eq)]
struct TowerData {
    levels: Vec<Level>,
    params: Vec<String>,
}

/// A tower of simple extensions of the rationals together with a list of
/// free transcendental parameters.
///
/// Defining polynomials are squarefree but need not be irreducible. When an
/// operation meets a zero divisor it fails with [`Error::Split`]; the
/// computation is then re-run per branch with [`Tower::branch`]. Towers are
/// immutable and cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    data: Arc<TowerData>,
}

#[derive(Clone, Debug)]
pub enum ZeroTest {
    Zero,
    NonZero,
    /// The element is a zero divisor; one tower per branch, canonically ordered.
    Split(Vec<Tower>),
}

impl Default for Tower {
    fn default() -> Self {
        Tower::rationals()
    }
}

impl Tower {
    pub fn rationals() -> Self {
        Tower { data: Arc::new(TowerData { levels: vec![], params: vec![] }) }
    }

    pub fn depth(&self) -> usize {
        self.data.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.data.levels
    }

    pub fn params(&self) -> &[String] {
        &self.data.params
    }

    pub fn gen_names(&self) -> Vec<String> {
        self.data.levels.iter().map(|l| l.name.clone()).collect()
    }

    /// `base` followed by the first index not yet used by a level name.
    pub fn fresh_name(&self, base: &str) -> String {
        (1..).map(|i| format!("{base}{i}")).find(|n| self.data.levels.iter().all(|l| &l.name != n)).unwrap()
    }

    pub fn display(&self, x: &Alg) -> String {
        self.reduce(x).display_with(&self.gen_names(), self.params())
    }

    fn with_levels(&self, levels: Vec<Level>) -> Tower {
        Tower { data: Arc::new(TowerData { levels, params: self.data.params.clone() }) }
    }

    /// Adds a fresh transcendental parameter.
    pub fn with_param(&self, name: &str) -> (Tower, Alg) {
        let mut params = self.data.params.clone();
        params.push(name.to_string());
        let idx = params.len() - 1;
        (Tower { data: Arc::new(TowerData { levels: self.data.levels.clone(), params }) }, Alg::param(idx))
    }

    /// Canonical representative: every generator exponent below the degree
    /// of its defining polynomial.
    pub fn reduce(&self, x: &Alg) -> Alg {
        let mut x = x.clone();
        for lvl in (0..self.depth()).rev() {
            let dp = &self.data.levels[lvl].defpoly;
            let d = dp.len() - 1;
            if (x.degree_in_gen(lvl) as usize) < d {
                continue;
            }
            let mut coeffs = x.to_univariate(lvl);
            for i in (d..coeffs.len()).rev() {
                let lead = std::mem::take(&mut coeffs[i]);
                if lead.is_literal_zero() {
                    continue;
                }
                for (j, c) in dp.iter().enumerate().take(d) {
                    if !c.is_literal_zero() {
                        let t = lead.mul_raw(c);
                        coeffs[i - d + j] = coeffs[i - d + j].sub(&t);
                    }
                }
            }
            coeffs.truncate(d);
            x = Alg::from_univariate(&coeffs, lvl);
        }
        x
    }

    pub fn mul(&self, a: &Alg, b: &Alg) -> Alg {
        if a.is_rational() || b.is_rational() {
            return a.mul_raw(b);
        }
        self.reduce(&a.mul_raw(b))
    }

    pub fn pow(&self, a: &Alg, mut e: u32) -> Alg {
        let mut base = a.clone();
        let mut acc = Alg::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Definite zero test; fails with [`Error::Split`] on a zero divisor.
    pub fn is_zero(&self, x: &Alg) -> Result<bool> {
        let x = self.reduce(x);
        if x.is_literal_zero() {
            return Ok(true);
        }
        if !x.has_params() {
            return self.is_zero_param_free(&x);
        }
        // A polynomial in transcendentals vanishes only if every coefficient does.
        let mut pending = None;
        for c in x.param_coefficients().values() {
            match self.is_zero_param_free(c) {
                Ok(false) => return Ok(false),
                Ok(true) => {}
                Err(e) => {
                    pending.get_or_insert(e);
                }
            }
        }
        pending.map_or(Ok(true), Err)
    }

    fn is_zero_param_free(&self, x: &Alg) -> Result<bool> {
        if x.is_literal_zero() {
            return Ok(true);
        }
        let span = x.gen_span();
        if span == 0 {
            return Ok(false);
        }
        let lvl = span - 1;
        let dp = &self.data.levels[lvl].defpoly;
        let g = upoly::gcd(self, &x.to_univariate(lvl), dp)?;
        let dg = g.len() - 1;
        if dg == 0 {
            Ok(false)
        } else if dg >= dp.len() - 1 {
            Ok(true)
        } else {
            let cof = upoly::div_exact(self, dp, &g)?;
            Err(Error::Split(self.split_info(lvl, vec![g, cof])))
        }
    }

    fn split_info(&self, level: usize, mut factors: Vec<Vec<Alg>>) -> SplitInfo {
        for f in factors.iter_mut() {
            *f = f.iter().map(|c| self.reduce(c)).collect();
        }
        factors.sort();
        SplitInfo { level, factors }
    }

    pub fn zero_test(&self, x: &Alg) -> ZeroTest {
        match self.is_zero(x) {
            Ok(true) => ZeroTest::Zero,
            Ok(false) => ZeroTest::NonZero,
            Err(Error::Split(s)) => {
                ZeroTest::Split(s.factors.iter().map(|f| self.replace_level(s.level, f.clone())).collect())
            }
            Err(_) => unreachable!("zero tests only fail by splitting"),
        }
    }

    pub fn eq(&self, a: &Alg, b: &Alg) -> Result<bool> {
        self.is_zero(&a.sub(b))
    }

    pub fn inv(&self, x: &Alg) -> Result<Alg> {
        let x = self.reduce(x);
        if x.is_literal_zero() {
            return Err(Error::ZeroDivisor);
        }
        if x.has_params() {
            return Err(Error::ParameterInverse);
        }
        let span = x.gen_span();
        if span == 0 {
            let r = x.as_rational().unwrap();
            return Ok(Alg::from_rational(Rational::one() / r));
        }
        let lvl = span - 1;
        let dp = &self.data.levels[lvl].defpoly;
        let (g, s, _) = upoly::ext_gcd(self, &x.to_univariate(lvl), dp)?;
        let dg = g.len() - 1;
        if dg == 0 {
            Ok(self.reduce(&Alg::from_univariate(&s, lvl)))
        } else if dg >= dp.len() - 1 {
            Err(Error::ZeroDivisor)
        } else {
            let cof = upoly::div_exact(self, dp, &g)?;
            Err(Error::Split(self.split_info(lvl, vec![g, cof])))
        }
    }

    pub fn div(&self, a: &Alg, b: &Alg) -> Result<Alg> {
        if let Some(r) = b.as_rational() {
            if r.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            return Ok(a.scale(&(Rational::one() / r)));
        }
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// New top level whose generator is a root of `defpoly` (made monic and
    /// squarefree). A linear polynomial yields its root without a new level.
    pub fn adjoin_root(&self, defpoly: &[Alg], name: &str) -> Result<(Tower, Alg)> {
        let p = upoly::trim(self, defpoly)?;
        if p.len() <= 1 {
            return Err(Error::ConstantPolynomial);
        }
        let p = upoly::squarefree(self, &p)?;
        if p.len() == 2 {
            return Ok((self.clone(), p[0].neg()));
        }
        Ok(self.push_level(p, name))
    }

    fn push_level(&self, monic: Vec<Alg>, name: &str) -> (Tower, Alg) {
        let mut levels = self.data.levels.clone();
        let defpoly = monic.iter().map(|c| self.reduce(c)).collect();
        levels.push(Level { name: name.to_string(), defpoly });
        let lvl = levels.len() - 1;
        (self.with_levels(levels), Alg::gen(lvl))
    }

    fn find_level(&self, monic: &[Alg]) -> Option<usize> {
        self.data.levels.iter().position(|l| l.defpoly.as_slice() == monic)
    }

    /// Replaces the defining polynomial of `level` by one of its factors and
    /// re-reduces the levels above.
    pub fn replace_level(&self, level: usize, factor: Vec<Alg>) -> Tower {
        let mut partial = self.with_levels(self.data.levels[..level].to_vec());
        let mut levels = partial.data.levels.clone();
        levels.push(Level { name: self.data.levels[level].name.clone(), defpoly: factor });
        partial = partial.with_levels(levels.clone());
        for l in &self.data.levels[level + 1..] {
            let defpoly = l.defpoly.iter().map(|c| partial.reduce(c)).collect();
            levels.push(Level { name: l.name.clone(), defpoly });
            partial = partial.with_levels(levels.clone());
        }
        partial
    }

    /// Runs `f`, re-running it once per branch whenever it reports a split of
    /// one of this tower's levels. Results are concatenated in canonical
    /// branch order.
    pub fn branch<T, F>(&self, f: &F) -> Result<Vec<T>>
    where
        F: Fn(&Tower) -> Result<Vec<T>>,
    {
        match f(self) {
            Err(Error::Split(s)) if s.level < self.depth() => {
                let mut out = Vec::new();
                for fac in &s.factors {
                    out.extend(self.replace_level(s.level, fac.clone()).branch(f)?);
                }
                Ok(out)
            }
            r => r,
        }
    }

    /// Calls `f` once per (symbolic) root of `poly`. Rational roots of a
    /// rational polynomial are split off and passed individually; the rest
    /// becomes one new level, explored with [`Tower::branch`].
    pub fn with_roots<T, F>(&self, poly: &[Alg], name: &str, f: &F) -> Result<Vec<T>>
    where
        F: Fn(&Tower, &Alg) -> Result<Vec<T>>,
    {
        let p = upoly::trim(self, poly)?;
        if p.len() <= 1 {
            return Ok(vec![]);
        }
        let mut p = upoly::squarefree(self, &p)?;
        let mut out = Vec::new();
        if p.iter().all(Alg::is_rational) {
            let rp: Vec<Rational> = p.iter().map(|c| c.as_rational().unwrap()).collect();
            let (roots, rest) = rational_roots(&rp);
            for r in roots {
                out.extend(f(self, &Alg::from_rational(r))?);
            }
            let lead = rest.last().cloned().unwrap_or_else(Rational::one);
            p = rest.into_iter().map(|c| Alg::from_rational(c / &lead)).collect();
        }
        match p.len() {
            0 | 1 => {}
            2 => out.extend(f(self, &p[0].neg())?),
            _ => {
                let (t, g) = match self.find_level(&p) {
                    Some(l) => (self.clone(), Alg::gen(l)),
                    None => self.push_level(p, name),
                };
                out.extend(t.branch(&|tw: &Tower| f(tw, &g))?);
            }
        }
        Ok(out)
    }

    /// A root of `X^nu - x`, reusing an existing generator with exactly that
    /// defining polynomial. Rational perfect powers need no extension.
    pub fn nth_root(&self, x: &Alg, nu: u32, name: &str) -> Result<(Tower, Alg)> {
        assert!(nu >= 1);
        let x = self.reduce(x);
        if self.is_zero(&x)? {
            return Ok((self.clone(), Alg::zero()));
        }
        if nu == 1 {
            return Ok((self.clone(), x));
        }
        if let Some(r) = x.as_rational() {
            if let Some(root) = exact_root(&r, nu) {
                return Ok((self.clone(), Alg::from_rational(root)));
            }
        }
        let mut p = vec![Alg::zero(); nu as usize + 1];
        p[0] = x.neg();
        p[nu as usize] = Alg::one();
        if let Some(l) = self.find_level(&p) {
            return Ok((self.clone(), Alg::gen(l)));
        }
        Ok(self.push_level(p, name))
    }

    /// A primitive `nu`-th root of unity, adjoined through the cyclotomic
    /// polynomial and shared by every later request in the same tower.
    pub fn root_of_unity(&self, nu: u32) -> (Tower, Alg) {
        match nu {
            1 => (self.clone(), Alg::one()),
            2 => (self.clone(), Alg::from_int(-1)),
            _ => {
                let p: Vec<Alg> = cyclotomic(nu).into_iter().map(Alg::from_rational).collect();
                match self.find_level(&p) {
                    Some(l) => (self.clone(), Alg::gen(l)),
                    None => self.push_level(p, &format!("ω{nu}")),
                }
            }
        }
    }

    /// All `nu` roots of `X^nu - x` as `ω^j ρ`.
    pub fn all_nth_roots(&self, x: &Alg, nu: u32, name: &str) -> Result<(Tower, Vec<Alg>)> {
        let (t, rho) = self.nth_root(x, nu, name)?;
        if rho.is_literal_zero() {
            return Ok((t, vec![Alg::zero()]));
        }
        let (t, w) = t.root_of_unity(nu);
        let mut out = Vec::with_capacity(nu as usize);
        let mut cur = rho;
        for _ in 0..nu {
            out.push(t.reduce(&cur));
            cur = t.mul(&cur, &w);
        }
        Ok((t, out))
    }

    /// Whether `other` only adds levels on top of this tower.
    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        self.depth() <= other.depth()
            && self.data.levels.iter().zip(other.data.levels.iter()).all(|(a, b)| a == b)
    }
}

/// Wire form of a tower: defining polynomials low to high, each coefficient
/// a term list over the lower generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRepr {
    pub generators: Vec<String>,
    pub defpolys: Vec<Vec<Vec<TermRepr>>>,
    pub parameters: Vec<String>,
}

impl Tower {
    pub fn to_repr(&self) -> TowerRepr {
        TowerRepr {
            generators: self.gen_names(),
            defpolys: self.data.levels.iter().map(|l| l.defpoly.iter().map(Alg::to_repr).collect()).collect(),
            parameters: self.data.params.clone(),
        }
    }

    pub fn from_repr(repr: &TowerRepr) -> Option<Tower> {
        let mut levels = Vec::new();
        for (name, dp) in repr.generators.iter().zip(&repr.defpolys) {
            let defpoly = dp.iter().map(|c| Alg::from_repr(c)).collect::<Option<Vec<_>>>()?;
            levels.push(Level { name: name.clone(), defpoly });
        }
        Some(Tower { data: Arc::new(TowerData { levels, params: repr.parameters.clone() }) })
    }

    /// Defining polynomial of a level rendered with the generator names,
    /// e.g. `θ1^2 - 2`.
    pub fn display_defpoly(&self, level: usize) -> String {
        let l = &self.data.levels[level];
        let names = self.gen_names();
        let mut parts = Vec::new();
        for (e, c) in l.defpoly.iter().enumerate().rev() {
            if c.is_literal_zero() {
                continue;
            }
            let cs = c.display_with(&names, self.params());
            let mono = match e {
                0 => String::new(),
                1 => l.name.clone(),
                _ => format!("{}^{e}", l.name),
            };
            let cs = if c.num_terms() > 1 { format!("({cs})") } else { cs };
            parts.push(match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs,
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{cs}*{mono}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

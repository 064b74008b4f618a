use crate::algnum::Tower;
use crate::error::{Error, Result};

use super::PuiseuxTruncation;

/// `outer(inner(t))`, where `outer` is read as a series in its own local
/// variable with nonnegative exponents and `inner` has positive order. The
/// result carries the ramification index of `inner`.
pub fn compose(tw: &Tower, outer: &PuiseuxTruncation, inner: &PuiseuxTruncation) -> Result<PuiseuxTruncation> {
    let inner = inner.normalize(tw)?;
    let outer = outer.normalize(tw)?;
    if outer.low() < 0 {
        return Err(Error::Precondition("outer series must have nonnegative exponents".into()));
    }
    let n = inner.ram_index();
    let v = match inner.valuation(tw)? {
        Some(v) => v,
        None if inner.is_exact() => {
            // inner = 0 exactly: only the constant term survives
            let c = outer.coeff(0);
            return Ok(PuiseuxTruncation::new(n, 0, vec![c], None));
        }
        None => inner.known_order().unwrap(),
    };
    if v < 1 {
        return Err(Error::Precondition("inner series must have positive order".into()));
    }
    let mut target: Option<i64> = outer.known_order().map(|k| k * v);
    if let Some(ki) = inner.known_order() {
        // a_j inner^j is known modulo t^((j-1)v + ki); the constant term is exact
        if let Some(j1) = outer.terms().map(|(j, _)| j).find(|&j| j >= 1) {
            let t = (j1 - 1) * v + ki;
            target = Some(target.map_or(t, |x| x.min(t)));
        }
    }
    let cap = |s: PuiseuxTruncation| match target {
        Some(t) => s.truncate(t),
        None => s,
    };
    let mut acc = PuiseuxTruncation::zero(n, target);
    let mut pw = PuiseuxTruncation::one().with_ram_index(n);
    let mut e = 0i64;
    for (j, c) in outer.terms() {
        while e < j {
            pw = cap(pw.mul(tw, &inner));
            e += 1;
        }
        acc = acc.add(&pw.scale(tw, c));
    }
    Ok(cap(acc))
}

/// `r` with `r(s(t)) = t`, for `s` of order exactly one with invertible
/// leading coefficient. Exact input is inverted to precision `t^prec`.
pub fn compositional_inverse(tw: &Tower, s: &PuiseuxTruncation, prec: i64) -> Result<PuiseuxTruncation> {
    let s = s.normalize(tw)?;
    if s.is_literal_zero() || s.low() != 1 {
        return Err(Error::Precondition("series must have order one".into()));
    }
    let k = s.known_order().map_or(prec, |k| k.min(prec));
    let n = s.ram_index();
    let c_inv = tw.inv(&s.coeff(1))?;
    let mut coeffs = vec![c_inv.clone()];
    for m in 2..k {
        let r = PuiseuxTruncation::new(n, 1, coeffs.clone(), None);
        let e = compose(tw, &s, &r)?.coeff(m);
        coeffs.push(tw.mul(&e, &c_inv).neg());
    }
    Ok(PuiseuxTruncation::new(n, 1, coeffs, Some(k)))
}

use super::*;
use crate::algnum::rational::rat;
use crate::algnum::{Alg, Rational};
use crate::poly::tests::example_curve;
use crate::poly::BivPoly;
use crate::series::Order;

fn parabola() -> BivPoly {
    BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)])
}

fn riccati() -> BivPoly {
    BivPoly::from_ints(&[(0, 1, 1), (2, 0, 1)])
}

/// `x + 2/3 r x^(3/2) + 1/3 x^2` with `r^2 = 2`.
fn example_truncation() -> (Tower, PuiseuxTruncation) {
    let two = [Alg::from_int(-2), Alg::zero(), Alg::one()];
    let (tw, r) = Tower::rationals().adjoin_root(&two, "r").unwrap();
    let s = PuiseuxTruncation::exact(2, 2, vec![Alg::one(), r.scale(&rat(2, 3)), Alg::from_frac(1, 3)]);
    (tw, s)
}

fn shown(sols: &[BruteSolution]) -> Vec<String> {
    let mut v: Vec<String> = sols.iter().map(|s| s.series.display(&s.tower, "x")).collect();
    v.sort();
    v
}

#[test]
fn residual_of_exact_solution() {
    let tw = Tower::rationals();
    let y = PuiseuxTruncation::monomial(1, 2, Alg::one());
    let r = residual_order(&tw, &parabola(), &y, 0, 1).unwrap();
    assert_eq!(r.residual_order, Order::Infinite);
}

#[test]
fn residual_of_example_truncation() {
    let (tw, y) = example_truncation();
    let r = residual_order(&tw, &example_curve(), &y, 0, 1).unwrap();
    // first surviving term 92/9 x^4
    assert_eq!(r.residual_order, Order::Exact(rat(4, 1)));
    let full = residual(&tw, &example_curve(), &y, 0, 1).unwrap();
    assert_eq!(full.coeff(8), Alg::from_frac(92, 9));
}

#[test]
fn residual_in_the_reciprocal_chart() {
    let (tw, c) = Tower::rationals().with_param("c");
    let y = PuiseuxTruncation::exact(1, 1, vec![Alg::one(), c.clone(), tw.mul(&c, &c)]);
    let r = residual_order(&tw, &riccati(), &y, 2, -1).unwrap();
    assert_eq!(r.residual_order, Order::Exact(rat(5, 1)));
}

#[test]
fn residual_order_is_monotone() {
    let (tw, y) = example_truncation();
    let short = y.truncate(3);
    let a = residual_order(&tw, &example_curve(), &short, 0, 1).unwrap();
    let b = residual_order(&tw, &example_curve(), &y, 0, 1).unwrap();
    let ord = |o: &Order| match o {
        Order::Exact(q) | Order::AtLeast(q) => q.clone(),
        Order::Infinite => rat(1000, 1),
    };
    assert!(ord(&a.residual_order) <= ord(&b.residual_order));
}

#[test]
fn brute_force_parabola() {
    let sols = brute_force_solutions(&Tower::rationals(), &parabola(), &Alg::zero(), 0, 1, 2, 6).unwrap();
    assert_eq!(shown(&sols), vec!["O(x^7)", "x^2 + O(x^7)"]);
}

#[test]
fn brute_force_cusp() {
    let f = BivPoly::from_ints(&[(0, 6, 64), (2, 0, -729)]);
    let sols = brute_force_solutions(&Tower::rationals(), &f, &Alg::zero(), 0, 1, 2, 6).unwrap();
    assert_eq!(shown(&sols), vec!["-x^(3/2) + O(x^(7/2))", "O(x^7)", "x^(3/2) + O(x^(7/2))", "κ1*x^(3/2) + O(x^(7/2))"]);
    let imag = sols.iter().find(|s| s.tower.depth() == 1).unwrap();
    assert_eq!(imag.tower.display_defpoly(0), "κ1^2 + 1");
}

#[test]
fn brute_force_riccati_family() {
    let sols = brute_force_solutions(&Tower::rationals(), &riccati(), &Alg::zero(), 2, -1, 1, 3).unwrap();
    assert_eq!(shown(&sols), vec!["O(x^4)", "x + c1*x^2 + c1^2*x^3 + O(x^4)"]);
    let fam = sols.iter().find(|s| !s.free.is_empty()).unwrap();
    assert_eq!(fam.free, vec![2]);
}

#[test]
fn embeddings_of_a_quadratic() {
    let (tw, y) = example_truncation();
    let p = 256;
    let embs = numeric::embeddings(&tw, p);
    assert_eq!(embs.len(), 2);
    for e in &embs {
        let sq = e[0].mul(&e[0]).sub(&Cx::from_rational(&rat(2, 1), p));
        assert!(sq.log2_abs().is_none_or(|b| b < -200));
    }
    assert_eq!(expand_numeric(&y, &tw, &[], p).len(), 2);
}

#[test]
fn numeric_exact_solution() {
    let tw = Tower::rationals();
    let y = PuiseuxTruncation::monomial(1, 2, Alg::one());
    let r = numeric_check(&parabola(), &y, &tw, 0, 1, &rat(1, 1000), 100, &Rational::from_integer(0.into()));
    assert_eq!(r.log10_abs, f64::NEG_INFINITY);
}

#[test]
fn numeric_example_truncation() {
    let (tw, y) = example_truncation();
    let r = numeric_check(&example_curve(), &y, &tw, 0, 1, &rat(1, 10000), 100, &rat(0, 1));
    // 92/9 x^4 at x = 10^-4 is about 10^-15
    assert!(r.log10_abs < -14.0 && r.log10_abs > -16.5, "{}", r.log10_abs);
    assert_eq!(r.embeddings, 2);
}

use super::*;
use crate::algnum::rational::rat;
use crate::poly::tests::example_curve;
use crate::series::substitute_into;

fn show(places: &[Place]) -> Vec<String> {
    places.iter().map(Place::display).collect()
}

fn origin() -> CurvePoint {
    CurvePoint::finite(Alg::zero(), Alg::zero())
}

#[test]
fn parabola_place() {
    let tw = Tower::rationals();
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let pl = places_at_point(&tw, &g, &origin(), 4).unwrap();
    assert_eq!(show(&pl), vec!["(t^2, 2*t + O(t^5))"]);
    assert_eq!((pl[0].k, pl[0].r), (2, 1));
}

#[test]
fn cusp_places() {
    let tw = Tower::rationals();
    let g = BivPoly::from_ints(&[(0, 6, 64), (2, 0, -729)]);
    let pl = places_at_point(&tw, &g, &origin(), 3).unwrap();
    let mut s = show(&pl);
    s.sort();
    assert_eq!(s, vec!["(t^3, -3/2*t + O(t^4))", "(t^3, 3/2*t + O(t^4))"]);
    assert!(pl.iter().all(|p| (p.k, p.r) == (3, 1)));
}

#[test]
fn smooth_place() {
    let tw = Tower::rationals();
    let f = BivPoly::from_ints(&[(0, 1, 1), (1, 0, -1)]);
    let pl = places_at_point(&tw, &f, &CurvePoint::finite(Alg::one(), Alg::one()), 4).unwrap();
    assert_eq!(show(&pl), vec!["(1 + t, 1 + t + O(t^4))"]);
    let bad = places_at_point(&tw, &f, &CurvePoint::finite(Alg::one(), Alg::zero()), 4);
    assert!(matches!(bad, Err(Error::NotOnCurve)));
}

#[test]
fn example_places_at_singular_point() {
    let f = example_curve();
    let tw = Tower::rationals();
    let center = CurvePoint::finite(Alg::zero(), Alg::one());
    let pl = places_at_point(&tw, &f, &center, 6).unwrap();
    let ks: Vec<u32> = pl.iter().map(|p| p.k).collect();
    assert_eq!(ks.iter().sum::<u32>(), 6, "{:?}", show(&pl));
    for p in &pl {
        assert_eq!(p.r, 0);
        let res = substitute_into(&p.tower, &f, &p.a, &p.b).normalize(&p.tower).unwrap();
        assert!(res.is_literal_zero(), "{}", p.display());
        assert!(res.known_order().unwrap() >= 6);
    }
    let mut unramified: Vec<String> = pl.iter().filter(|p| p.k == 1).map(Place::display).collect();
    unramified.sort();
    assert_eq!(unramified, vec!["(t, 1 + 1/2*t^2 + 3/16*t^4 + O(t^6))", "(t, 1 - 1/2*t^2 - 3/16*t^4 + O(t^6))"]);
}

#[test]
fn infinite_p0() {
    // y p - 1 = 0: p = 1/y has a pole over y = 0
    let f = BivPoly::from_ints(&[(1, 1, 1), (0, 0, -1)]);
    let tw = Tower::rationals();
    let center = CurvePoint::new(Coord::Finite(Alg::zero()), Coord::Infinity);
    let pl = places_at_point(&tw, &f, &center, 3).unwrap();
    assert_eq!(show(&pl), vec!["(t, t^-1 + O(t^2))"]);
    assert_eq!(pl[0].r, -1);
}

#[test]
fn infinity_transform() {
    let f = BivPoly::from_ints(&[(0, 1, 1), (1, 0, -1)]);
    assert_eq!(transform_infinity(&f, 0).unwrap(), BivPoly::from_ints(&[(0, 1, 1), (1, 0, 1)]));
    let g = transform_infinity(&example_curve(), 0).unwrap();
    let expect = BivPoly::from_ints(&[
        (12, 0, 1),
        (10, 1, 6),
        (10, 0, -1),
        (8, 2, 15),
        (8, 1, 4),
        (8, 0, 3),
        (6, 3, 20),
        (6, 2, 14),
        (6, 1, 6),
        (6, 0, 1),
        (4, 4, 15),
        (4, 3, 12),
        (4, 2, 3),
        (2, 5, 6),
        (2, 4, 3),
        (0, 6, 1),
    ]);
    assert_eq!(g, expect);
    let tw = Tower::rationals();
    let pl = places_at_point(&tw, &g, &origin(), 2).unwrap();
    assert_eq!(pl.len(), 1, "{:?}", show(&pl));
    assert_eq!((pl[0].k, pl[0].r), (3, 3));
}

#[test]
fn ramification_candidates() {
    let f = example_curve();
    let tw = Tower::rationals();
    let pl = places_at_point(&tw, &f, &CurvePoint::finite(Alg::zero(), Alg::one()), 4).unwrap();
    let two = pl.iter().find(|p| p.k == 2).unwrap();
    let rd = ramification_data(two, 0);
    assert_eq!(rd.n, Some(rat(2, 1)));
    assert_eq!(rd.positive_integer(), Some(2));
    let fake = Place { k: 1, r: 1, ..two.clone() };
    assert_eq!(ramification_data(&fake, 0).positive_integer(), None);
    let neg = Place { k: 1, r: 2, ..two.clone() };
    assert_eq!(ramification_data(&neg, 2).positive_integer(), Some(1));
}

#[test]
fn conjugate_expansion() {
    let tw = Tower::rationals();
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let pl = places_at_point(&tw, &g, &origin(), 2).unwrap();
    let all = expand_conjugates(&pl[0]).unwrap();
    assert_eq!(show(&all), vec!["(t^2, 2*t + O(t^3))", "(t^2, -2*t + O(t^3))"]);
}

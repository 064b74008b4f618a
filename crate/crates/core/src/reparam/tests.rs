use super::*;
use crate::algnum::rational::rat;
use crate::places::places_at_point;
use crate::poly::tests::example_curve;
use crate::poly::CurvePoint;

fn origin() -> CurvePoint {
    CurvePoint::finite(Alg::zero(), Alg::zero())
}

fn places(f: &BivPoly, at: &CurvePoint, n: i64) -> Vec<Place> {
    places_at_point(&Tower::rationals(), f, at, n).unwrap()
}

fn shown(sols: &[ReparamSolution]) -> Vec<String> {
    let mut v: Vec<String> = sols.iter().map(|s| s.s.display(&s.tower, "t")).collect();
    v.sort();
    v
}

#[test]
fn parabola() {
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let pl = &places(&g, &origin(), 6)[0];
    let p = ReparamProblem::new(pl, 0, 1).unwrap();
    assert_eq!((p.n, p.nu), (1, 1));
    let (_, sig) = sigma1_candidates(&p).unwrap();
    assert_eq!(sig, vec![Alg::one()]);
    let sols = reparametrize(&p, 5).unwrap();
    assert_eq!(shown(&sols), vec!["t + O(t^7)"]);
    assert_eq!(sols[0].kind, BriotKind::Unique);
}

#[test]
fn example_ramified_place() {
    let f = example_curve();
    let pls = places(&f, &CurvePoint::finite(Alg::zero(), Alg::one()), 8);
    let mut seen = Vec::new();
    for pl in pls.iter().filter(|p| p.k == 2) {
        let p = ReparamProblem::new(pl, 0, 1).unwrap();
        assert_eq!((p.n, p.nu), (2, 2));
        let sols = reparametrize(&p, 4).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(s.kind, BriotKind::Unique);
            assert_eq!(s.tower.depth(), pl.tower.depth());
            seen.push(s.s.truncate(5).display(&s.tower, "t"));
        }
    }
    seen.sort();
    let r = pls.iter().find(|p| p.k == 2).unwrap().tower.gen_names()[0].clone();
    let real = [format!("t + 1/3*{r}*t^2 + 1/18*t^3 - 89/1080*{r}*t^4 + O(t^5)"), format!("-t + 1/3*{r}*t^2 - 1/18*t^3 - 89/1080*{r}*t^4 + O(t^5)")];
    for want in &real {
        assert!(seen.contains(want), "{seen:?}");
    }
    assert_eq!(seen.len(), 4);
}

#[test]
fn riccati_at_infinity() {
    // y' + y^2
    let f = BivPoly::from_ints(&[(0, 1, 1), (2, 0, 1)]);
    let pl = &places(&f, &origin(), 6)[0];
    assert_eq!((pl.k, pl.r), (1, 2));
    let p = ReparamProblem::new(pl, 2, -1).unwrap();
    assert_eq!((p.n, p.nu), (1, 1));
    let sols = reparametrize(&p, 4).unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0].sigma, Alg::one());
    assert_eq!(sols[0].kind, BriotKind::Family { index: 1, param: 0 });
    assert_eq!(sols[0].s.display(&sols[0].tower, "t"), "t + c1*t^2 + c1^2*t^3 + c1^3*t^4 + c1^4*t^5 + O(t^6)");
}

#[test]
fn no_reparametrization() {
    // (1 + y) y' + y^2
    let f = BivPoly::from_ints(&[(0, 1, 1), (1, 1, 1), (2, 0, 1)]);
    let pl = &places(&f, &origin(), 6)[0];
    let p = ReparamProblem::new(pl, 2, -1).unwrap();
    assert_eq!(p.n, 1);
    let sols = reparametrize(&p, 4).unwrap();
    assert!(sols.iter().all(|s| s.kind == BriotKind::Empty));
}

#[test]
fn cusp_exact() {
    let f = BivPoly::from_ints(&[(0, 6, 64), (2, 0, -729)]);
    let pls = places(&f, &origin(), 6);
    let pl = pls.iter().find(|p| p.b.coeff(1) == Alg::from_rational(rat(3, 2))).unwrap();
    let p = ReparamProblem::new(pl, 0, 1).unwrap();
    assert_eq!((p.n, p.nu), (2, 2));
    let sols = reparametrize(&p, 5).unwrap();
    assert_eq!(shown(&sols), vec!["-t + O(t^7)", "t + O(t^7)"]);
}

#[test]
fn order_condition_fails() {
    let f = example_curve();
    let y0 = CurvePoint::finite(Alg::zero(), Alg::one());
    let pl = places(&f, &y0, 4).into_iter().find(|p| p.k == 1).unwrap();
    assert!(ReparamProblem::new(&pl, 0, 1).is_some());
    let fake = Place { r: 1, ..pl };
    assert!(ReparamProblem::new(&fake, 0, 1).is_none());
}

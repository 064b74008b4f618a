use super::*;
use crate::algnum::rational::rat;

fn q(v: &[i64]) -> QPoly {
    v.iter().map(|&n| rat(n, 1)).collect()
}

/// `((p-1)^2 + y^2)^3 - 4 (p-1)^2 y^2`
pub(crate) fn example_curve() -> BivPoly {
    let tw = Tower::rationals();
    let pm1 = BivPoly::p().sub(&BivPoly::constant(Alg::one()));
    let pm1sq = pm1.mul(&tw, &pm1);
    let ysq = BivPoly::y().mul(&tw, &BivPoly::y());
    let base = pm1sq.add(&ysq).pow(&tw, 3);
    base.sub(&pm1sq.mul(&tw, &ysq).scale(&tw, &Alg::from_int(4)))
}

#[test]
fn squarefree_examples() {
    let tw = Tower::rationals();
    let pmy = BivPoly::from_ints(&[(0, 1, 1), (1, 0, -1)]);
    assert_eq!(squarefree_part(&pmy.pow(&tw, 2)).unwrap(), pmy);
    let f = example_curve();
    assert_eq!(squarefree_part(&f).unwrap(), f);
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let yy = BivPoly::from_ints(&[(2, 0, 1)]);
    let sq = squarefree_part(&yy.mul(&tw, &g)).unwrap();
    // y (p^2 - 4y) up to a rational factor
    let expect = BivPoly::y().mul(&tw, &g);
    let c = sq.coeff(1, 2).as_rational().unwrap();
    assert_eq!(sq.scale(&tw, &Alg::from_rational(c.recip())), expect);
}

#[test]
fn content_stripping() {
    let tw = Tower::rationals();
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let (out, rep) = strip_content(&BivPoly::y().mul(&tw, &g)).unwrap();
    assert_eq!(out, g);
    assert_eq!(rep.y_factors, vec![BivPoly::y()]);
    let (out, rep) = strip_content(&g).unwrap();
    assert_eq!(out, g);
    assert!(rep.is_empty());
    let full = BivPoly::from_ints(&[(0, 1, 1), (0, 0, -1)]).mul(&tw, &BivPoly::from_ints(&[(1, 0, 1), (0, 0, 2)]));
    assert!(matches!(strip_content(&full), Err(Error::DegenerateEquation)));
}

#[test]
fn eliminants() {
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    assert_eq!(g.derivative_p(), BivPoly::from_ints(&[(0, 1, 2)]));
    assert_eq!(resultant_p(&g, &g.derivative_p()).unwrap(), q(&[0, -16]));
    // disc of p^2 - 4y is 16y
    assert_eq!(discriminant_p(&g).unwrap(), q(&[0, 16]));
    let tw = Tower::rationals();
    assert!(g.evaluate(&tw, &Alg::from_int(1), &Alg::from_int(2)).is_literal_zero());
}

#[test]
fn example_eliminants() {
    let f = example_curve();
    let res = resultant_p(&f, &f.derivative_p()).unwrap();
    // 16384 y^18 (27 y^2 - 16)^2
    let inner = qpoly::pow(&q(&[-16, 0, 27]), 2);
    let mut expect = vec![rat(0, 1); 18];
    expect.extend(qpoly::scale(&inner, &rat(16384, 1)));
    assert_eq!(res, expect);
    assert_eq!(f.to_qy().unwrap()[0], q(&[1, 0, -1, 0, 3, 0, 1]));
}

#[test]
fn newton_polygons() {
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let np = newton_polygon(&g);
    assert_eq!(np.vertices, vec![(0, 2), (1, 0)]);
    assert_eq!(np.edges.len(), 1);
    let e = &np.edges[0];
    assert_eq!((e.m, e.q), (2, 1));
    assert_eq!(e.char_degree(), 1);
    let yp = BivPoly::from_ints(&[(1, 1, 1)]);
    assert!(newton_polygon(&yp).edges.is_empty());
    let c = BivPoly::from_ints(&[(0, 0, 1), (3, 1, 2), (1, 2, 1)]);
    assert_eq!(newton_polygon(&c).vertices, vec![(0, 0)]);
    // two edges with increasing slope
    let h = BivPoly::from_ints(&[(0, 4, 1), (1, 1, 1), (3, 0, 1), (2, 2, 5)]);
    let np = newton_polygon(&h);
    assert_eq!(np.vertices, vec![(0, 4), (1, 1), (3, 0)]);
    assert_eq!(np.edges[0].char_degree(), 1);
    assert_eq!((np.edges[1].m, np.edges[1].q), (1, 2));
}

#[test]
fn critical_points_simple() {
    let g = BivPoly::from_ints(&[(0, 2, 1), (1, 0, -4)]);
    let cs = critical_points(&g).unwrap();
    assert_eq!(cs.points.len(), 1);
    assert_eq!(cs.points[0].point, CurvePoint::finite(Alg::zero(), Alg::zero()));
    assert!(cs.infinity_infinity);
    let pmy = BivPoly::from_ints(&[(0, 1, 1), (1, 0, -1)]);
    let cs = critical_points(&pmy).unwrap();
    assert_eq!(cs.points.len(), 1);
    assert_eq!(cs.points[0].point, CurvePoint::finite(Alg::zero(), Alg::zero()));
    assert!(cs.infinity_infinity);
}

#[test]
fn critical_points_of_example() {
    let f = example_curve();
    let cs = critical_points(&f).unwrap();
    assert!(cs.infinity_infinity);
    let shown: Vec<String> = cs
        .points
        .iter()
        .map(|c| {
            let tw = &c.tower;
            let defs: Vec<String> = (0..tw.depth()).map(|l| tw.display_defpoly(l)).collect();
            format!("{} {:?}", c.point.display(tw), defs)
        })
        .collect();
    assert_eq!(cs.points.len(), 3, "{shown:?}");
    for c in &cs.points {
        let tw = &c.tower;
        assert!(c.point.is_on_curve(tw, &f).unwrap());
        let y0 = c.point.y0.finite().unwrap();
        let p0 = c.point.p0.finite().unwrap();
        let fp = f.derivative_p().evaluate(tw, y0, p0);
        assert!(tw.is_zero(p0).unwrap() || tw.is_zero(&fp).unwrap());
    }
    assert_eq!(cs.points[0].point, CurvePoint::finite(Alg::zero(), Alg::one()));
}

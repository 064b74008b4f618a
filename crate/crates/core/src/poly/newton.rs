use num_integer::Integer;

use super::BivPoly;

/// One compact edge of a Newton polygon. Along the edge the weighted degree
/// `m*i + q*j` is constant and equal to `level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygonEdge {
    /// Endpoint with the smaller `i` (larger `j`).
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// Weights `(m, q)` in lowest terms.
    pub m: u32,
    pub q: u32,
    pub level: u32,
    /// Support points lying on the edge, ordered by `i`.
    pub points: Vec<(u32, u32)>,
}

impl NewtonPolygonEdge {
    /// Degree of the characteristic polynomial in `Z = c^m`.
    pub fn char_degree(&self) -> u32 {
        (self.start.1 - self.end.1) / self.m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<NewtonPolygonEdge>,
}

/// Vertices of the lower-left boundary of `conv(support) + R_{>=0}^2`,
/// from the vertex with least `i` to the vertex with least `j`.
pub fn lower_hull(points: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut pts: Vec<(u32, u32)> = points.to_vec();
    pts.sort();
    // keep only the lowest j per column, and only columns that lower j
    let mut stair: Vec<(u32, u32)> = Vec::new();
    for &(i, j) in &pts {
        if stair.last().is_none_or(|&(_, lj)| j < lj) {
            stair.push((i, j));
        }
    }
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for &pt in &stair {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 as i64 - a.0 as i64) * (pt.1 as i64 - a.1 as i64)
                - (b.1 as i64 - a.1 as i64) * (pt.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

/// Newton polygon of the support of `f` (coefficients are taken as given;
/// callers drop vanishing ones first).
pub fn newton_polygon(f: &BivPoly) -> NewtonPolygon {
    let support = f.support();
    let vertices = lower_hull(&support);
    let mut edges = Vec::new();
    for w in vertices.windows(2) {
        let (a, b) = (w[0], w[1]);
        let di = b.0 - a.0;
        let dj = a.1 - b.1;
        let g = di.gcd(&dj);
        let (m, q) = (dj / g, di / g);
        let level = m * a.0 + q * a.1;
        let points = support.iter().copied().filter(|&(i, j)| m * i + q * j == level).collect();
        edges.push(NewtonPolygonEdge { start: a, end: b, m, q, level, points });
    }
    NewtonPolygon { vertices, edges }
}

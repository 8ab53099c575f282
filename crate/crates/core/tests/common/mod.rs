#![allow(dead_code)]

use cag_core::corpus::{random_simple_polygon, rng};
use cag_core::exact::{ratio, Point2};
use cag_core::polygon::{BoundaryPoint, SimplePolygon};
use proptest::prelude::*;

pub fn polygon(max_n: usize) -> impl Strategy<Value = SimplePolygon> {
    (any::<u64>(), 5..=max_n).prop_map(|(seed, n)| random_simple_polygon(&mut rng(seed), n, 32))
}

/// Boundary point from raw draws; `edge` is reduced modulo `n`.
pub fn boundary_point(n: usize, edge: usize, num: i64, den: i64) -> BoundaryPoint {
    BoundaryPoint::new(edge % n, ratio(num % den, den), n)
}

pub fn raw_boundary_point() -> impl Strategy<Value = (usize, i64, i64)> {
    (0usize..64, 0i64..8, 1i64..8)
}

/// Interior or boundary point near a vertex-fan: the centroid of a random
/// triple of boundary points, kept only if it lies in the polygon.
pub fn point_in(p: &SimplePolygon, picks: &[(usize, i64, i64)]) -> Option<Point2> {
    let n = p.n();
    let pts: Vec<Point2> = picks
        .iter()
        .map(|&(e, a, b)| p.locate(&boundary_point(n, e, a, b)))
        .collect();
    let third = ratio(1, 3);
    let sum = pts.iter().skip(1).fold(pts[0].clone(), |acc, q| &acc + q);
    let c = sum.scale(&third);
    p.contains_closed(&c).then_some(c)
}

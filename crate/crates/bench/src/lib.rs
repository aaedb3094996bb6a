//! Benchmark inputs shared by the criterion suites.

use polynormal_core::paperlab::fixtures;
use polynormal_core::rational::rat;
use polynormal_core::{Point, Polytope};

/// Integer points on a parabola; every point is a hull vertex.
pub fn parabola_points(n: i64) -> Vec<Point> {
    (0..n).map(|i| Point::from_ints(&[i, i * i])).collect()
}

/// The unit cube in dimension 3 dilated by `k`.
pub fn dilated_cube(k: i64) -> Polytope {
    fixtures::unit_cube(3).scale(&rat(k, 1)).expect("positive scale")
}

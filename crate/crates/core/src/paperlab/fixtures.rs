//! Named polytopes used by the worked examples.

use crate::point::Point;
use crate::polytope::Polytope;
use crate::pt;
use crate::rational::Rational;

/// Standard simplex `conv{0, e_1, ..., e_d}`.
pub fn standard_simplex(d: usize) -> Polytope {
    let mut pts = vec![Point::zero(d)];
    for i in 0..d {
        let mut c = vec![0i64; d];
        c[i] = 1;
        pts.push(Point::from_ints(&c));
    }
    Polytope::hull(&pts).expect("simplex is full-dimensional")
}

pub fn unit_cube(d: usize) -> Polytope {
    let pts: Vec<Point> = (0..1u32 << d)
        .map(|mask| Point::from_ints(&(0..d).map(|i| i64::from((mask >> i) & 1)).collect::<Vec<_>>()))
        .collect();
    Polytope::hull(&pts).expect("cube is full-dimensional")
}

pub fn interval(lo: Rational, hi: Rational) -> Polytope {
    Polytope::hull(&[Point::new(vec![lo]), Point::new(vec![hi])]).expect("nondegenerate interval")
}

/// The 3/2-dilated standard triangle.
pub fn simplex_three_halves() -> Polytope {
    Polytope::hull(&[pt![0, 0], pt![(3, 2), 0], pt![0, (3, 2)]]).unwrap()
}

/// Lattice tetrahedron whose double contains `(1,1,1)` but which has no
/// lattice points besides its vertices.
pub fn non_idp_tetrahedron() -> Polytope {
    Polytope::hull(&[pt![0, 0, 0], pt![1, 1, 0], pt![1, 0, 1], pt![0, 1, 1]]).unwrap()
}

pub fn unit_square() -> Polytope {
    unit_cube(2)
}

/// `[0,1] x [0, 7/10]`.
pub fn rectangle_07() -> Polytope {
    Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, (7, 10)], pt![1, (7, 10)]]).unwrap()
}

/// Hexagon whose normal fan refines that of [`quad`].
pub fn hexagon() -> Polytope {
    Polytope::hull(&[pt![0, 0], pt![3, 0], pt![3, -2], pt![2, -3], pt![-1, -3], pt![-1, -1]]).unwrap()
}

/// `[0,2] x [-2,0]`.
pub fn quad() -> Polytope {
    Polytope::hull(&[pt![0, 0], pt![2, 0], pt![2, -2], pt![0, -2]]).unwrap()
}

/// The pair `(nQ, nP)` with `Q = conv{(0,0),(1,k),(0,1)}` and
/// `P = conv{(0,0),(-l,1),(-(l-1),1)}`, returned as `(nQ, nP)`.
pub fn thin_triangle_pair(n: i64, k: i64, l: i64) -> (Polytope, Polytope) {
    let s = Rational::from_integer(n.into());
    let q = Polytope::hull(&[pt![0, 0], pt![1, k], pt![0, 1]]).unwrap();
    let p = Polytope::hull(&[pt![0, 0], pt![-l, 1], pt![-(l - 1), 1]]).unwrap();
    (q.scale(&s).unwrap(), p.scale(&s).unwrap())
}

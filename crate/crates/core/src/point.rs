use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::{is_integer, Rational};

/// A point of `Q^d`. Ordering is lexicographic on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_big_ints(coords: &[BigInt]) -> Self {
        Point(coords.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integer)
    }

    pub fn scaled(&self, c: &Rational) -> Point {
        Point(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|x| -x).collect())
    }

    /// `a . x` for an integer functional `a`.
    pub fn dot_int(&self, a: &[BigInt]) -> Rational {
        debug_assert_eq!(a.len(), self.0.len());
        if self.is_integral() {
            let sum: BigInt = self.0.iter().zip(a).map(|(x, ai)| x.numer() * ai).sum();
            return Rational::from_integer(sum);
        }
        let mut acc = Rational::zero();
        for (x, ai) in self.0.iter().zip(a) {
            if !ai.is_zero() {
                acc += x * Rational::from_integer(ai.clone());
            }
        }
        acc
    }

    /// Coordinate-wise fractional part, i.e. the class of the point modulo `Z^d`.
    pub fn fract(&self) -> Point {
        Point(self.0.iter().map(|x| x - x.floor()).collect())
    }

    /// Average of a nonempty list of points.
    pub fn centroid<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<Point> {
        let mut iter = points.into_iter();
        let first = iter.next()?.clone();
        let mut count = 1i64;
        let sum = iter.fold(first, |acc, p| {
            count += 1;
            &acc + p
        });
        Some(sum.scaled(&Rational::new(1.into(), count.into())))
    }
}

impl Index<usize> for Point {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Point {
    type Output = Point;

    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Builds a [`Point`] from `i64` literals or `(numer, denom)` pairs.
#[macro_export]
macro_rules! pt {
    ($($c:expr),* $(,)?) => {
        $crate::Point::new(vec![$($crate::point::IntoCoord::into_coord($c)),*])
    };
}

#[doc(hidden)]
pub trait IntoCoord {
    fn into_coord(self) -> Rational;
}

impl IntoCoord for i64 {
    fn into_coord(self) -> Rational {
        Rational::from_integer(self.into())
    }
}

impl IntoCoord for i32 {
    fn into_coord(self) -> Rational {
        Rational::from_integer(self.into())
    }
}

impl IntoCoord for (i64, i64) {
    fn into_coord(self) -> Rational {
        Rational::new(self.0.into(), self.1.into())
    }
}

impl IntoCoord for Rational {
    fn into_coord(self) -> Rational {
        self
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{primitive_direction, Rational};

/// The closed halfspace `a . x <= b` with `a` a primitive integer vector.
///
/// Normalizing `a` to be primitive makes the representation of every
/// halfspace unique, so derived equality and ordering are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl Halfspace {
    /// Normalizes an integer normal by its gcd.
    pub fn new(normal: Vec<BigInt>, offset: Rational) -> Result<Self> {
        let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Err(Error::InvalidArgument("halfspace normal is zero".into()));
        }
        let normal = normal.into_iter().map(|x| x / &g).collect();
        Ok(Halfspace {
            normal,
            offset: offset / Rational::from_integer(g),
        })
    }

    pub fn from_ints(normal: &[i64], offset: Rational) -> Result<Self> {
        Self::new(normal.iter().map(|&x| BigInt::from(x)).collect(), offset)
    }

    /// Halfspace `n . x <= n . through` for a rational normal `n`.
    pub fn from_rational_normal(normal: &[Rational], offset: &Rational) -> Result<Self> {
        let (a, k) =
            primitive_direction(normal).ok_or_else(|| Error::InvalidArgument("halfspace normal is zero".into()))?;
        Ok(Halfspace {
            normal: a,
            offset: offset / k,
        })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn normal_rational(&self) -> Vec<Rational> {
        self.normal.iter().cloned().map(Rational::from_integer).collect()
    }

    /// `b - a . x`; nonnegative exactly for points of the halfspace.
    pub fn slack(&self, x: &Point) -> Rational {
        &self.offset - x.dot_int(&self.normal)
    }

    pub fn contains(&self, x: &Point) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &Point) -> bool {
        self.slack(x).is_zero()
    }

    pub fn translate(&self, t: &Point) -> Halfspace {
        Halfspace {
            normal: self.normal.clone(),
            offset: &self.offset + t.dot_int(&self.normal),
        }
    }

    pub fn scale(&self, c: &Rational) -> Halfspace {
        debug_assert!(c.is_positive());
        Halfspace {
            normal: self.normal.clone(),
            offset: &self.offset * c,
        }
    }

    /// Closure of the complement, `a . x >= b`.
    pub fn flipped(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: -&self.offset,
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "[{}] . x <= {}", terms.join(", "), self.offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn normalization_is_unique() {
        let a = Halfspace::from_ints(&[2, 4], int(6)).unwrap();
        let b = Halfspace::from_ints(&[1, 2], int(3)).unwrap();
        assert_eq!(a, b);
        let c = Halfspace::from_rational_normal(&[rat(1, 2), rat(1, 3)], &int(1)).unwrap();
        assert_eq!(c, Halfspace::from_ints(&[3, 2], int(6)).unwrap());
        assert!(Halfspace::from_ints(&[0, 0], int(1)).is_err());
    }

    #[test]
    fn membership_and_translation() {
        let h = Halfspace::from_ints(&[1, 1], int(1)).unwrap();
        assert!(h.contains(&crate::pt![(1, 2), (1, 2)]));
        assert!(h.is_tight(&crate::pt![(1, 2), (1, 2)]));
        assert!(!h.contains(&crate::pt![1, 1]));
        let t = h.translate(&crate::pt![1, 0]);
        assert!(t.is_tight(&crate::pt![2, 0]));
        assert!(h.flipped().contains(&crate::pt![1, 1]));
    }
}

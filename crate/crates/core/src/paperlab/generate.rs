//! Seeded random instances.
//!
//! Pairs satisfying the fan and edge-length hypotheses are built as
//! `P = d * Q + Z` with `Z` a sum of lattice-direction segments. The normal
//! fan of such a sum is the common refinement of `N(Q)` and `N(Z)`, and
//! every edge of `P` parallel to an edge of `Q` has length at least `d`
//! times that edge. Both hypotheses are re-verified before a pair is
//! returned.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fan::{edge_hypothesis, refines};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::Rational;

const MAX_ATTEMPTS: usize = 500;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct PairParams {
    /// Vertex coordinates of the base polytope are drawn from `0..=coord_range`.
    pub coord_range: i64,
    /// Upper bound on the number of zonotope segments added to `d * Q`.
    pub max_segments: usize,
    /// Allow rational dilation and translation of `Q`.
    pub rational: bool,
}

impl Default for PairParams {
    fn default() -> Self {
        PairParams {
            coord_range: 2,
            max_segments: 2,
            rational: true,
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    let den = rng.random_range(1..=max_den);
    let num = rng.random_range(0..=max_num * den);
    Rational::new(num.into(), den.into())
}

fn random_shift(rng: &mut ChaCha8Rng, d: usize, rational: bool) -> Point {
    Point::new(
        (0..d)
            .map(|_| {
                if rational {
                    random_rational(rng, 2, 3) - Rational::from_integer(1.into())
                } else {
                    Rational::from_integer(rng.random_range(-2..=2i64).into())
                }
            })
            .collect(),
    )
}

/// Hull of random integer points in `[0, range]^d`, retried until
/// full-dimensional.
pub fn random_lattice_polytope(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Result<Polytope> {
    for _ in 0..MAX_ATTEMPTS {
        let count = rng.random_range(d + 1..=d + 4);
        let pts: Vec<Point> = (0..count)
            .map(|_| Point::from_ints(&(0..d).map(|_| rng.random_range(0..=range)).collect::<Vec<_>>()))
            .collect();
        if let Ok(p) = Polytope::hull(&pts) {
            return Ok(p);
        }
    }
    Err(Error::GenerationBudgetExceeded(MAX_ATTEMPTS))
}

fn random_primitive(rng: &mut ChaCha8Rng, d: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..d).map(|_| rng.random_range(-2..=2)).collect();
        let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 1 {
            return v;
        }
    }
}

/// `hull(scale * vertices(base) + vertices(Z))` with `Z` the sum of the
/// segments `[0, len_i * u_i]`.
fn add_segments(base: &Polytope, scale: &Rational, segments: &[(Vec<i64>, Rational)]) -> Result<Polytope> {
    let zonotope: Vec<Point> = segments
        .iter()
        .map(|(u, len)| {
            [
                Point::zero(base.dim()),
                Point::from_big_ints(&u.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).scaled(len),
            ]
        })
        .multi_cartesian_product()
        .map(|choice| choice.iter().fold(Point::zero(base.dim()), |acc, p| &acc + p))
        .collect();
    let zonotope = if zonotope.is_empty() {
        vec![Point::zero(base.dim())]
    } else {
        zonotope
    };
    let pts: Vec<Point> = base
        .vertices()
        .iter()
        .cartesian_product(&zonotope)
        .map(|(v, z)| &v.scaled(scale) + z)
        .collect();
    Polytope::hull(&pts)
}

/// A pair `(Q, P)` with `N(P)` refining `N(Q)` and `ℓ(e_P) >= d * ℓ(Φ(e_P))`.
pub fn gen_theorem_pair(seed: u64, d: usize, params: &PairParams) -> Result<(Polytope, Polytope)> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let mut rng = rng(seed);
    let factor = Rational::from_integer(d.into());
    for _ in 0..MAX_ATTEMPTS {
        let mut q = random_lattice_polytope(&mut rng, d, params.coord_range.max(1))?;
        if params.rational && rng.random_bool(0.5) {
            let s = Rational::new(1.into(), rng.random_range(1..=3i64).into());
            q = q.scale(&s)?.translate(&random_shift(&mut rng, d, true));
        }
        let count = rng.random_range(0..=params.max_segments);
        let segments: Vec<(Vec<i64>, Rational)> = (0..count)
            .map(|_| {
                let u = random_primitive(&mut rng, d);
                let len = random_rational(&mut rng, 1, 2) + Rational::new(1.into(), 2.into());
                (u, len)
            })
            .collect();
        let p = add_segments(&q, &factor, &segments)?.translate(&random_shift(&mut rng, d, params.rational));
        if refines(&p, &q)? && edge_hypothesis(&p, &q, &factor)?.all_pass {
            return Ok((q, p));
        }
    }
    Err(Error::GenerationBudgetExceeded(MAX_ATTEMPTS))
}

/// A generated theorem pair with `P` shrunk by `shrink`, which breaks the
/// edge-length hypothesis whenever `shrink < 1`.
pub fn gen_control_pair(seed: u64, d: usize, shrink: &Rational, params: &PairParams) -> Result<(Polytope, Polytope)> {
    let (q, p) = gen_theorem_pair(seed, d, params)?;
    Ok((q, p.scale(shrink)?))
}

/// Lattice parts `Q_1..Q_s` together with `P = t * (Q_1 + ... + Q_s) + Z`.
pub fn gen_sum_instance(seed: u64, parts: usize, t: &Rational) -> Result<(Vec<Polytope>, Polytope)> {
    let mut rng = rng(seed);
    let qs = (0..parts)
        .map(|_| random_lattice_polytope(&mut rng, 2, 2))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = qs[0].clone();
    for q in &qs[1..] {
        sum = sum.minkowski_sum(q)?;
    }
    let count = rng.random_range(0..=1usize);
    let segments: Vec<(Vec<i64>, Rational)> = (0..count)
        .map(|_| (random_primitive(&mut rng, 2), Rational::from_integer(1.into())))
        .collect();
    let p = add_segments(&sum, t, &segments)?;
    Ok((qs, p))
}

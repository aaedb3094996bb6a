//! Lattice points, shifted-lattice sets `G(Q)`, sumsets and integer
//! decomposition checks.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::rational::{ceil_int, floor_int, Rational};

/// Cap on the number of integer grid points a bounding-box scan may visit.
/// Scans that would exceed it fail with [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_candidates: u64,
}

impl Budget {
    pub const DEFAULT_CANDIDATES: u64 = 10_000_000;

    pub fn new(max_candidates: u64) -> Self {
        Budget { max_candidates }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_CANDIDATES)
    }
}

/// A finite set of rational points of a common dimension, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<Point>,
}

impl PointSet {
    pub fn new(dim: usize) -> Self {
        PointSet {
            dim,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut set = PointSet::new(dim);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, p: Point) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(self.points.insert(p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn translate(&self, t: &Point) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(|p| p + t).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.points.iter().cloned().collect()
    }
}

impl IntoIterator for PointSet {
    type Item = Point;
    type IntoIter = std::collections::btree_set::IntoIter<Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.into_iter()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::collections::btree_set::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// `P ∩ Z^d`, by scanning the integer bounding box. The innermost coordinate
/// is solved as an interval from the facet inequalities.
pub fn lattice_points(p: &Polytope, budget: Budget) -> Result<PointSet> {
    let d = p.dim();
    let (lo, hi) = p.bounding_box();
    let lo: Vec<BigInt> = lo.iter().map(ceil_int).collect();
    let hi: Vec<BigInt> = hi.iter().map(floor_int).collect();
    let mut candidates: u128 = 1;
    for (l, h) in lo.iter().zip(&hi) {
        if h < l {
            return Ok(PointSet::new(d));
        }
        let width = (h - l + BigInt::one()).to_u128().unwrap_or(u128::MAX);
        candidates = candidates.saturating_mul(width);
    }
    if candidates > u128::from(budget.max_candidates) {
        return Err(Error::BudgetExceeded {
            candidates,
            cap: budget.max_candidates,
        });
    }
    let mut out = BTreeSet::new();
    let partial = vec![Rational::zero(); p.facets().len()];
    let mut prefix = Vec::with_capacity(d);
    scan(p, &lo, &hi, &mut prefix, &partial, &mut out);
    Ok(PointSet { dim: d, points: out })
}

fn scan(
    p: &Polytope,
    lo: &[BigInt],
    hi: &[BigInt],
    prefix: &mut Vec<BigInt>,
    partial: &[Rational],
    out: &mut BTreeSet<Point>,
) {
    let k = prefix.len();
    let d = p.dim();
    if k + 1 == d {
        let mut low = Rational::from_integer(lo[k].clone());
        let mut high = Rational::from_integer(hi[k].clone());
        for (h, s) in p.facets().iter().zip(partial) {
            let a = &h.normal()[k];
            let rest = h.offset() - s;
            if a.is_zero() {
                if rest.is_negative() {
                    return;
                }
                continue;
            }
            let bound = rest / Rational::from_integer(a.clone());
            if a.is_positive() {
                if bound < high {
                    high = bound;
                }
            } else if bound > low {
                low = bound;
            }
        }
        let mut t = ceil_int(&low);
        let end = floor_int(&high);
        while t <= end {
            let mut coords = prefix.clone();
            coords.push(t.clone());
            out.insert(Point::from_big_ints(&coords));
            t += 1;
        }
        return;
    }
    let mut t = lo[k].clone();
    while t <= hi[k] {
        let next: Vec<Rational> = p
            .facets()
            .iter()
            .zip(partial)
            .map(|(h, s)| s + Rational::from_integer(&h.normal()[k] * &t))
            .collect();
        prefix.push(t.clone());
        scan(p, lo, hi, prefix, &next, out);
        prefix.pop();
        t += 1;
    }
}

/// `G(Q)`: the union over vertices `v` of `(v + Z^d) ∩ Q`.
///
/// Vertices congruent modulo `Z^d` contribute the same shifted lattice, so
/// each residue class is scanned once.
pub fn g_set(q: &Polytope, budget: Budget) -> Result<PointSet> {
    let mut classes: BTreeSet<Point> = BTreeSet::new();
    let mut out = PointSet::new(q.dim());
    for v in q.vertices() {
        if !classes.insert(v.fract()) {
            continue;
        }
        let shifted = lattice_points(&q.translate(&v.neg()), budget)?;
        out.points.extend(shifted.points.iter().map(|x| x + v));
    }
    Ok(out)
}

/// `{a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    let mut out = PointSet::new(a.dim);
    for x in &a.points {
        for y in &b.points {
            out.points.insert(x + y);
        }
    }
    Ok(out)
}

/// Outcome of an integer decomposition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdpVerdict {
    pub holds: bool,
    /// Lexicographically first lattice point with no decomposition.
    pub witness: Option<Point>,
    pub checked_range: String,
}

impl fmt::Display for IdpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds ({})", self.checked_range),
            Some(w) => write!(f, "fails at {w} ({})", self.checked_range),
        }
    }
}

fn require_lattice(p: &Polytope) -> Result<()> {
    if p.is_lattice() {
        Ok(())
    } else {
        Err(Error::NotLatticePolytope)
    }
}

/// First `z` of `targets` (in order) that is not `y + x` with `y ∈ parts`
/// and `x ∈ rest ∩ Z^d`. Since `z - y` is integral, membership in `rest`
/// stands in for membership in its lattice point set.
///
/// With `share = Some(t)`, lattice points near `t * z` are tried before the
/// exhaustive scan.
fn first_undecomposable(
    targets: &PointSet,
    parts: &PointSet,
    rest: &Polytope,
    share: Option<&Rational>,
) -> Option<Point> {
    let list: Vec<&Point> = parts.iter().collect();
    let targets: Vec<&Point> = targets.iter().collect();
    let decomposes = |z: &Point| {
        if let Some(t) = share {
            let centre: Vec<BigInt> = z.scaled(t).coords().iter().map(floor_int).collect();
            let near = neighbourhood(&centre);
            if near.iter().any(|y| parts.contains(y) && rest.contains_point(&(z - y))) {
                return true;
            }
        }
        list.iter().any(|y| rest.contains_point(&(z - *y)))
    };
    targets.par_iter().find_first(|z| !decomposes(z)).map(|z| (*z).clone())
}

/// `centre + {0, 1}^d`.
fn neighbourhood(centre: &[BigInt]) -> Vec<Point> {
    let d = centre.len();
    (0..1u32 << d)
        .map(|mask| {
            let c: Vec<BigInt> = centre
                .iter()
                .enumerate()
                .map(|(i, x)| x + BigInt::from((mask >> i) & 1))
                .collect();
            Point::from_big_ints(&c)
        })
        .collect()
}

/// Pair integer decomposition: `(Q+P) ∩ Z^d = (Q ∩ Z^d) + (P ∩ Z^d)`.
pub fn idp_pair(q: &Polytope, p: &Polytope, budget: Budget) -> Result<IdpVerdict> {
    require_lattice(q)?;
    require_lattice(p)?;
    let sum = q.minkowski_sum(p)?;
    let targets = lattice_points(&sum, budget)?;
    let parts = lattice_points(p, budget)?;
    let witness = first_undecomposable(&targets, &parts, q, None);
    Ok(IdpVerdict {
        holds: witness.is_none(),
        witness,
        checked_range: "pair (Q, P)".into(),
    })
}

/// `max(2, d - 1)`.
pub fn default_k_max(dim: usize) -> usize {
    dim.saturating_sub(1).max(2)
}

/// Stepwise single-polytope check: `((j+1)P) ∩ Z^d = (jP ∩ Z^d) + (P ∩ Z^d)`
/// for `j = 1..k_max-1`. Success for all `j` gives decompositions of every
/// lattice point of `kP` into `k` lattice points of `P` for `k <= k_max`.
pub fn idp_single(p: &Polytope, k_max: usize, budget: Budget) -> Result<IdpVerdict> {
    require_lattice(p)?;
    if k_max < 2 {
        return Err(Error::InvalidArgument(format!("k_max must be >= 2, got {k_max}")));
    }
    let base = lattice_points(p, budget)?;
    for j in 1..k_max {
        let jp = p.scale(&Rational::from_integer(j.into()))?;
        let next = p.scale(&Rational::from_integer((j + 1).into()))?;
        let targets = lattice_points(&next, budget)?;
        let share = Rational::new(BigInt::one(), BigInt::from(j + 1));
        if let Some(w) = first_undecomposable(&targets, &base, &jp, Some(&share)) {
            return Ok(IdpVerdict {
                holds: false,
                witness: Some(w),
                checked_range: format!("failed at k = {}", j + 1),
            });
        }
    }
    Ok(IdpVerdict {
        holds: true,
        witness: None,
        checked_range: format!("stepwise for k = 2..={k_max}"),
    })
}

/// `G(rP) + G(P) ⊆ G((r+1)P)` for a lattice polytope `P` and `r > 0`.
pub fn lemma_a_holds(p: &Polytope, r: &Rational, budget: Budget) -> Result<bool> {
    require_lattice(p)?;
    let rp = p.scale(r)?;
    let r1p = p.scale(&(r + Rational::one()))?;
    let lhs = sumset(&g_set(&rp, budget)?, &g_set(p, budget)?)?;
    Ok(lhs.is_subset(&g_set(&r1p, budget)?))
}

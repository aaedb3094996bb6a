//! Exact decision of whether a polytope is covered by finitely many
//! translates, and the convex-normality checks built on it.
//!
//! The target `T` is full-dimensional and each translate is closed, so
//! `T \ ∪ translates` is relatively open in `T`: it is nonempty exactly when
//! some full-dimensional piece survives the subtraction. Lower-dimensional
//! pieces are therefore dropped without affecting the verdict.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::lattice::{g_set, Budget};
use crate::linalg::affine_dimension;
use crate::point::Point;
use crate::polytope::{enumerate_vertices, Polytope};
use crate::rational::Rational;

/// A bounded, full-dimensional convex region given by irredundant halfspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCell {
    halfspaces: Vec<Halfspace>,
    vertices: Vec<Point>,
}

impl ConvexCell {
    pub fn from_polytope(p: &Polytope) -> Self {
        ConvexCell {
            halfspaces: p.facets().to_vec(),
            vertices: p.vertices().to_vec(),
        }
    }

    /// `None` when the intersection is empty or lower-dimensional. The
    /// halfspaces must bound a region inside some polytope.
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Option<Self> {
        let vertices = enumerate_vertices(dim, &halfspaces);
        if affine_dimension(&vertices) != Some(dim) {
            return None;
        }
        let mut halfspaces: Vec<Halfspace> = halfspaces
            .into_iter()
            .filter(|h| {
                let on: Vec<&Point> = vertices.iter().filter(|v| h.is_tight(v)).collect();
                affine_dimension(on) == Some(dim - 1)
            })
            .collect();
        halfspaces.sort();
        halfspaces.dedup();
        Some(ConvexCell { halfspaces, vertices })
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Dimension of the cell itself; always the ambient dimension for cells
    /// produced here.
    pub fn dim(&self) -> usize {
        affine_dimension(&self.vertices).expect("cells are nonempty")
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex centroid; lies in the interior of a full-dimensional cell.
    pub fn interior_point(&self) -> Point {
        Point::centroid(&self.vertices).expect("cells are nonempty")
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    pub fn to_polytope(&self) -> Polytope {
        Polytope::hull(&self.vertices).expect("cells are full-dimensional")
    }

    pub fn volume(&self) -> Rational {
        self.to_polytope().volume()
    }

    /// Full-dimensional part of `self ∩ u`.
    pub fn intersect(&self, u: &Polytope) -> Option<ConvexCell> {
        let mut hs = self.halfspaces.clone();
        hs.extend_from_slice(u.facets());
        ConvexCell::from_halfspaces(self.ambient_dim(), hs)
    }

    fn bounding_box(&self) -> (Vec<Rational>, Vec<Rational>) {
        bounding_box(&self.vertices)
    }
}

fn bounding_box(points: &[Point]) -> (Vec<Rational>, Vec<Rational>) {
    let mut lo = points[0].coords().to_vec();
    let mut hi = lo.clone();
    for p in &points[1..] {
        for (k, x) in p.coords().iter().enumerate() {
            if x < &lo[k] {
                lo[k] = x.clone();
            }
            if x > &hi[k] {
                hi[k] = x.clone();
            }
        }
    }
    (lo, hi)
}

/// Boxes whose overlap has nonempty interior.
fn boxes_overlap(a: &(Vec<Rational>, Vec<Rational>), b: &(Vec<Rational>, Vec<Rational>)) -> bool {
    (0..a.0.len()).all(|k| a.0[k] < b.1[k] && b.0[k] < a.1[k])
}

/// Pieces covering the closure of `cell \ u`, with pairwise disjoint
/// interiors. Facet `i` of `u` contributes
/// `cell ∩ {a_i x >= b_i} ∩ {a_j x <= b_j : j < i}`; pieces that are not
/// full-dimensional are dropped.
pub fn subtract(cell: &ConvexCell, u: &Polytope) -> Result<Vec<ConvexCell>> {
    let d = cell.ambient_dim();
    if u.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: u.dim(),
        });
    }
    Ok(subtract_unchecked(cell, u))
}

fn subtract_unchecked(cell: &ConvexCell, u: &Polytope) -> Vec<ConvexCell> {
    let d = cell.ambient_dim();
    // A facet of u with the whole cell on its far side: interiors are disjoint.
    if u.facets()
        .iter()
        .any(|h| cell.vertices.iter().all(|v| !h.slack(v).is_positive()))
    {
        return vec![cell.clone()];
    }
    if cell.vertices.iter().all(|v| u.contains_point(v)) {
        return Vec::new();
    }
    let mut pieces = Vec::new();
    for (i, h) in u.facets().iter().enumerate() {
        // Skip facets that do not cut into the cell.
        if cell.vertices.iter().all(|v| h.contains(v)) {
            continue;
        }
        let mut hs = cell.halfspaces.clone();
        hs.push(h.flipped());
        hs.extend(u.facets()[..i].iter().cloned());
        if let Some(piece) = ConvexCell::from_halfspaces(d, hs) {
            pieces.push(piece);
        }
    }
    pieces
}

/// Result of a covering query.
#[derive(Clone, Debug)]
pub struct CoverVerdict {
    pub covered: bool,
    /// A point of the target outside every translate; present iff uncovered.
    pub witness: Option<Point>,
    /// Full-dimensional cells left uncovered, sorted by vertex list.
    pub residual_cells: Vec<ConvexCell>,
    pub warnings: Vec<String>,
}

impl fmt::Display for CoverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("covered"),
            Some(w) => write!(
                f,
                "uncovered: witness {w}, {} residual cell(s)",
                self.residual_cells.len()
            ),
        }
    }
}

/// Decides `target ⊆ ∪ (g + P)` over the given `(g, P)` pairs.
pub fn is_covered(target: &Polytope, translates: &[(Point, Polytope)]) -> Result<CoverVerdict> {
    let items: Vec<(&Point, &Polytope)> = translates.iter().map(|(g, p)| (g, p)).collect();
    cover(target, items)
}

fn cover(target: &Polytope, mut items: Vec<(&Point, &Polytope)>) -> Result<CoverVerdict> {
    let d = target.dim();
    for (g, p) in &items {
        for found in [g.dim(), p.dim()] {
            if found != d {
                return Err(Error::DimensionMismatch { expected: d, found });
            }
        }
    }
    items.sort_by(|a, b| a.0.cmp(b.0));
    let mut cells = vec![ConvexCell::from_polytope(target)];
    for (g, p) in items {
        if cells.is_empty() {
            break;
        }
        let u = p.translate(g);
        let ubox = bounding_box(u.vertices());
        cells = cells
            .par_iter()
            .map(|c| {
                if boxes_overlap(&c.bounding_box(), &ubox) {
                    subtract_unchecked(c, &u)
                } else {
                    vec![c.clone()]
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    cells.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let witness = cells.first().map(ConvexCell::interior_point);
    Ok(CoverVerdict {
        covered: cells.is_empty(),
        witness,
        residual_cells: cells,
        warnings: Vec::new(),
    })
}

/// Checks `witness ∈ T` and `witness ∉ g + P` for every translate.
pub fn witness_is_sound(target: &Polytope, translates: &[(Point, &Polytope)], witness: &Point) -> bool {
    target.contains_point(witness) && translates.iter().all(|(g, p)| !p.contains_point(&(witness - g)))
}

fn cover_by_translates(target: &Polytope, tile: &Polytope, bases: &[Point]) -> Result<CoverVerdict> {
    let verdict = cover(target, bases.iter().map(|g| (g, tile)).collect())?;
    if cfg!(debug_assertions) {
        if let Some(w) = &verdict.witness {
            let translates: Vec<(Point, &Polytope)> = bases.iter().map(|g| (g.clone(), tile)).collect();
            assert!(witness_is_sound(target, &translates, w), "unsound witness {w}");
        }
    }
    Ok(verdict)
}

/// `cP = G((c-1)P) + P`, decided by covering `cP` with `G((c-1)P)`-translates
/// of `P`. Values `1 < c < 2` are accepted with a warning.
pub fn convex_normal_at(p: &Polytope, c: &Rational, budget: Budget) -> Result<CoverVerdict> {
    let one = Rational::one();
    if c <= &one {
        return Err(Error::InvalidArgument(format!("c must exceed 1, got {c}")));
    }
    let target = p.scale(c)?;
    let bases = g_set(&p.scale(&(c - &one))?, budget)?.to_vec();
    let mut verdict = cover_by_translates(&target, p, &bases)?;
    if c < &Rational::from_integer(2.into()) {
        verdict
            .warnings
            .push(format!("c = {c} lies below 2, outside the range of the definition"));
    }
    Ok(verdict)
}

/// `Q + P = G(Q) + P`. Note the asymmetry: `G` is taken of the first argument.
pub fn pair_convex_normal(q: &Polytope, p: &Polytope, budget: Budget) -> Result<CoverVerdict> {
    let target = q.minkowski_sum(p)?;
    let bases = g_set(q, budget)?.to_vec();
    cover_by_translates(&target, p, &bases)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every `c = p/q ∈ [2, k]` with `q <= denom_bound`.
    Grid,
    /// `c = 2, 3` for a lattice polytope; larger integers follow by induction.
    IntegerSteps,
}

#[derive(Clone, Debug)]
pub struct KConvexNormalReport {
    pub mode: CheckMode,
    pub k: Rational,
    pub checks: Vec<(Rational, CoverVerdict)>,
    pub all_pass: bool,
    /// What the checks establish, stated without overreach.
    pub claim: String,
    /// Inductive steps cited in integer-steps mode.
    pub chain: Vec<String>,
}

/// Finite verification of k-convex-normality.
pub fn k_convex_normal(
    p: &Polytope,
    k: &Rational,
    denom_bound: u32,
    mode: CheckMode,
    budget: Budget,
) -> Result<KConvexNormalReport> {
    let two = Rational::from_integer(2.into());
    if k < &two {
        return Err(Error::InvalidArgument(format!("k must be >= 2, got {k}")));
    }
    if denom_bound < 1 {
        return Err(Error::InvalidArgument("denominator bound must be >= 1".into()));
    }
    let values: Vec<Rational> = match mode {
        CheckMode::Grid => grid_values(&two, k, denom_bound),
        CheckMode::IntegerSteps => {
            if !p.is_lattice() {
                return Err(Error::NotLatticePolytope);
            }
            let three = Rational::from_integer(3.into());
            if k >= &three {
                vec![two.clone(), three]
            } else {
                vec![two.clone()]
            }
        }
    };
    let checks = values
        .into_iter()
        .map(|c| convex_normal_at(p, &c, budget).map(|v| (c, v)))
        .collect::<Result<Vec<_>>>()?;
    let all_pass = checks.iter().all(|(_, v)| v.covered);
    let mut chain = Vec::new();
    let claim = match mode {
        CheckMode::Grid => format!(
            "grid-verified: {} value(s) c = p/q in [2, {k}] with q <= {denom_bound}; other rational c unchecked",
            checks.len()
        ),
        CheckMode::IntegerSteps => {
            let top = k.floor().to_integer();
            if all_pass {
                let mut n = num_bigint::BigInt::from(4);
                while n <= top {
                    chain.push(format!(
                        "c = {n}: G({}P) + P = {}P and 2P = G(P) + P give G({}P) + P = {n}P",
                        &n - 2u32,
                        &n - 1u32,
                        &n - 1u32
                    ));
                    n += 1;
                }
                format!("checked c = 2, 3; every integer c in [2, {top}] follows by induction")
            } else {
                "integer-step check failed; no induction applies".to_string()
            }
        }
    };
    Ok(KConvexNormalReport {
        mode,
        k: k.clone(),
        checks,
        all_pass,
        claim,
        chain,
    })
}

/// Distinct `p/q ∈ [lo, hi]` with `1 <= q <= denom_bound`, ascending.
pub fn grid_values(lo: &Rational, hi: &Rational, denom_bound: u32) -> Vec<Rational> {
    let mut out = BTreeSet::new();
    for q in 1..=denom_bound {
        let qr = Rational::from_integer(q.into());
        let start = (lo * &qr).ceil().to_integer();
        let end = (hi * &qr).floor().to_integer();
        let mut n = start;
        while n <= end {
            out.insert(Rational::new(n.clone(), q.into()));
            n += 1;
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;
    use crate::rational::{int, rat};

    fn simplex2() -> Polytope {
        Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap()
    }

    fn square() -> Polytope {
        Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, 1], pt![1, 1]]).unwrap()
    }

    fn rect07() -> Polytope {
        Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, (7, 10)], pt![1, (7, 10)]]).unwrap()
    }

    fn total_volume(cells: &[ConvexCell]) -> Rational {
        cells.iter().map(ConvexCell::volume).sum()
    }

    #[test]
    fn subtract_simplex_from_its_double() {
        let big = ConvexCell::from_polytope(&simplex2().scale(&int(2)).unwrap());
        let pieces = subtract(&big, &simplex2()).unwrap();
        assert_eq!(total_volume(&pieces), rat(3, 2));
    }

    #[test]
    fn subtract_self_and_disjoint() {
        let p = ConvexCell::from_polytope(&square());
        assert!(subtract(&p, &square()).unwrap().is_empty());
        let touching = square().translate(&pt![1, 0]);
        assert_eq!(subtract(&p, &touching).unwrap(), vec![p.clone()]);
        assert!(subtract(&p, &Polytope::hull(&[pt![0], pt![1]]).unwrap()).is_err());
    }

    #[test]
    fn uncovered_double_simplex() {
        let target = simplex2().scale(&int(2)).unwrap();
        let translates: Vec<(Point, Polytope)> = [pt![0, 0], pt![1, 0], pt![0, 1]]
            .into_iter()
            .map(|g| (g, simplex2()))
            .collect();
        let v = is_covered(&target, &translates).unwrap();
        assert!(!v.covered);
        assert_eq!(v.residual_cells.len(), 1);
        assert_eq!(v.residual_cells[0].vertices(), &[pt![0, 1], pt![1, 0], pt![1, 1]]);
        assert_eq!(v.witness, Some(pt![(2, 3), (2, 3)]));
        let v = is_covered(&square(), &[(pt![0, 0], square())]).unwrap();
        assert!(v.covered && v.witness.is_none());
    }

    #[test]
    fn convex_normality_of_dilated_simplices() {
        let b = Budget::default();
        let v = convex_normal_at(&simplex2().scale(&rat(3, 2)).unwrap(), &int(2), b).unwrap();
        assert!(v.covered);
        let v = convex_normal_at(&simplex2(), &int(2), b).unwrap();
        assert!(!v.covered);
        let w = v.witness.unwrap();
        let tri = Polytope::hull(&[pt![1, 0], pt![0, 1], pt![1, 1]]).unwrap();
        assert!(tri.contains(&w).unwrap());
        let v = convex_normal_at(&square(), &rat(3, 2), b).unwrap();
        assert_eq!(v.warnings.len(), 1);
        assert!(convex_normal_at(&square(), &int(1), b).is_err());
    }

    #[test]
    fn pair_asymmetry() {
        let b = Budget::default();
        assert!(pair_convex_normal(&rect07(), &square(), b).unwrap().covered);
        assert!(!pair_convex_normal(&square(), &rect07(), b).unwrap().covered);
    }

    #[test]
    fn k_convex_normal_modes() {
        let b = Budget::default();
        let q = simplex2().scale(&rat(3, 2)).unwrap();
        let r = k_convex_normal(&q, &int(2), 4, CheckMode::Grid, b).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert!(r.all_pass);
        let r = k_convex_normal(&simplex2(), &int(2), 3, CheckMode::Grid, b).unwrap();
        assert!(!r.all_pass);
        assert!(matches!(
            k_convex_normal(&q, &int(3), 1, CheckMode::IntegerSteps, b),
            Err(Error::NotLatticePolytope)
        ));
        let r = k_convex_normal(&square(), &int(5), 1, CheckMode::IntegerSteps, b).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.checks.len(), 2);
        assert_eq!(r.chain.len(), 2);
    }

    #[test]
    fn grid_enumeration() {
        let g = grid_values(&int(2), &int(3), 3);
        assert_eq!(g, vec![int(2), rat(7, 3), rat(5, 2), rat(8, 3), int(3)]);
    }
}

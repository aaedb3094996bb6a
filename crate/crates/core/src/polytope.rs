//! Full-dimensional rational polytopes kept in a canonical dual description.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::linalg::{affine_dimension, determinant, nullspace, rank, solve};
use crate::point::Point;
use crate::rational::{primitive_direction, Rational};

/// A nonempty face, identified by the sorted indices of its vertices in the
/// parent's vertex list. Ordered by dimension, then index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    dim: usize,
    vertices: Vec<usize>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    /// Whether `self` is a subset of `other`.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        is_sorted_subset(&self.vertices, &other.vertices)
    }
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// An edge with its primitive direction and lattice length:
/// `end - start = length * direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub start: Point,
    pub end: Point,
    pub direction: Vec<BigInt>,
    pub length: Rational,
}

impl Edge {
    pub fn between(start: &Point, end: &Point) -> Option<Edge> {
        let (direction, length) = primitive_direction((end - start).coords())?;
        Some(Edge {
            start: start.clone(),
            end: end.clone(),
            direction,
            length,
        })
    }
}

/// Lattice length of the segment `[v, w]`: the factor `k > 0` with
/// `w - v = k * u` for `u` primitive.
pub fn lattice_length(v: &Point, w: &Point) -> Rational {
    Edge::between(v, w).map_or_else(Rational::zero, |e| e.length)
}

/// A full-dimensional polytope in `R^d`.
///
/// Vertices are sorted lexicographically, facets are irredundant with
/// primitive integer normals, and `incidence[i]` lists the vertices on facet
/// `i`. Two polytopes are equal when their vertex lists are equal.
#[derive(Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Halfspace>,
    incidence: Vec<Vec<usize>>,
    faces: OnceLock<Vec<Face>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polytope")
            .field("dim", &self.dim)
            .field(
                "vertices",
                &self.vertices.iter().map(ToString::to_string).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{{}}}", self.vertices.iter().join(", "))
    }
}

fn check_dims<'a>(dim: usize, points: impl IntoIterator<Item = &'a Point>) -> Result<()> {
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(())
}

impl Polytope {
    /// Assembles the canonical form from known extreme points and
    /// irredundant facets, cross-checking the two descriptions.
    fn from_parts(dim: usize, mut vertices: Vec<Point>, mut facets: Vec<Halfspace>) -> Polytope {
        vertices.sort();
        vertices.dedup();
        facets.sort();
        facets.dedup();
        let incidence = incidence_scan(&vertices, &facets);
        Polytope::assemble(dim, vertices, facets, incidence)
    }

    /// `vertices` and `facets` sorted and deduplicated, `incidence` sorted.
    fn assemble(dim: usize, vertices: Vec<Point>, facets: Vec<Halfspace>, incidence: Vec<Vec<usize>>) -> Polytope {
        if cfg!(debug_assertions) {
            assert_eq!(incidence, incidence_scan(&vertices, &facets), "inconsistent incidence");
            let mut on = vec![0usize; vertices.len()];
            for &i in incidence.iter().flatten() {
                on[i] += 1;
            }
            for (v, &k) in vertices.iter().zip(&on) {
                assert!(facets.iter().all(|h| h.contains(v)), "vertex {v} violates a facet");
                assert!(k >= dim, "vertex {v} lies on {k} < {dim} facets");
            }
        }
        Polytope {
            dim,
            vertices,
            facets,
            incidence,
            faces: OnceLock::new(),
        }
    }

    /// Convex hull of a finite point set.
    pub fn hull(points: &[Point]) -> Result<Polytope> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::NotFullDimensional(0));
        }
        check_dims(dim, points)?;
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if affine_dimension(&pts) != Some(dim) {
            return Err(Error::NotFullDimensional(dim));
        }
        Ok(match dim {
            1 => hull_1d(pts),
            2 => hull_2d(pts),
            _ => hull_brute_force(dim, pts),
        })
    }

    /// Intersection of halfspaces; must be bounded and full-dimensional.
    pub fn from_halfspaces(halfspaces: &[Halfspace]) -> Result<Polytope> {
        let dim = halfspaces.first().ok_or(Error::EmptyInput)?.dim();
        for h in halfspaces {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
        }
        let mut hs = halfspaces.to_vec();
        hs.sort();
        hs.dedup();
        let normals: Vec<Vec<Rational>> = hs.iter().map(Halfspace::normal_rational).collect();
        if rank(&normals) < dim {
            // A lineality direction: nonempty means unbounded. Pin the lineality
            // space to zero to decide emptiness.
            let mut pinned = hs.clone();
            for n in nullspace(&normals, dim) {
                let h = Halfspace::from_rational_normal(&n, &Rational::zero())?;
                pinned.push(h.flipped());
                pinned.push(h);
            }
            return if enumerate_vertices(dim, &pinned).is_empty() {
                Err(Error::Empty)
            } else {
                Err(Error::Unbounded)
            };
        }
        let vertices = enumerate_vertices(dim, &hs);
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        if has_recession_ray(dim, &normals) {
            return Err(Error::Unbounded);
        }
        if affine_dimension(&vertices) != Some(dim) {
            return Err(Error::NotFullDimensional(dim));
        }
        let facets = hs
            .into_iter()
            .filter(|h| {
                let on: Vec<&Point> = vertices.iter().filter(|v| h.is_tight(v)).collect();
                affine_dimension(on) == Some(dim - 1)
            })
            .collect();
        Ok(Polytope::from_parts(dim, vertices, facets))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Vertex indices on each facet, parallel to [`Polytope::facets`].
    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn vertex_index(&self, v: &Point) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// All vertices have integer coordinates.
    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point::is_integral)
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        check_dims(self.dim, [x])?;
        Ok(self.contains_point(x))
    }

    pub(crate) fn contains_point(&self, x: &Point) -> bool {
        self.facets.iter().all(|h| h.contains(x))
    }

    /// `self ⊆ other`, decided by checking every vertex against every facet.
    pub fn is_contained_in(&self, other: &Polytope) -> Result<bool> {
        check_dims(other.dim, self.vertices.first())?;
        Ok(self.vertices.iter().all(|v| other.contains_point(v)))
    }

    pub fn translate(&self, t: &Point) -> Polytope {
        assert_eq!(t.dim(), self.dim, "translation dimension");
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            facets: self.facets.iter().map(|h| h.translate(t)).collect(),
            incidence: self.incidence.clone(),
            faces: self.faces.clone(),
        }
    }

    /// Dilation `c * P` about the origin.
    pub fn scale(&self, c: &Rational) -> Result<Polytope> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScale(c.to_string()));
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(c)).collect(),
            facets: self.facets.iter().map(|h| h.scale(c)).collect(),
            incidence: self.incidence.clone(),
            faces: self.faces.clone(),
        })
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let sums: Vec<Point> = self
            .vertices
            .iter()
            .cartesian_product(&other.vertices)
            .map(|(a, b)| a + b)
            .collect();
        Polytope::hull(&sums)
    }

    /// Per-coordinate minimum and maximum over the vertices.
    pub fn bounding_box(&self) -> (Vec<Rational>, Vec<Rational>) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (k, x) in v.coords().iter().enumerate() {
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

    /// Every nonempty face, ordered by `(dimension, vertex index set)`.
    /// The last entry is the polytope itself.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.compute_faces())
    }

    fn compute_faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<Vec<usize>> = self.incidence.iter().cloned().collect();
        let mut queue: Vec<Vec<usize>> = seen.iter().cloned().collect();
        while let Some(x) = queue.pop() {
            for facet in &self.incidence {
                let y: Vec<usize> = x.iter().copied().filter(|i| facet.contains(i)).collect();
                if !y.is_empty() && seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.insert((0..self.vertices.len()).collect());
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vertices| Face {
                dim: affine_dimension(vertices.iter().map(|&i| &self.vertices[i])).expect("faces are nonempty"),
                vertices,
            })
            .collect();
        faces.sort();
        faces
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = &Face> {
        self.faces().iter().filter(move |f| f.dim == k)
    }

    /// Face whose vertex index set is exactly `indices`.
    pub fn face_with_vertices(&self, indices: &[usize]) -> Option<&Face> {
        self.faces().iter().find(|f| f.vertices == indices)
    }

    /// Facet indices whose hyperplanes contain the face.
    pub fn facets_containing(&self, face: &Face) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| is_sorted_subset(&face.vertices, &self.incidence[i]))
            .collect()
    }

    pub fn face_points(&self, face: &Face) -> Vec<&Point> {
        face.vertices.iter().map(|&i| &self.vertices[i]).collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.faces_of_dim(1)
            .map(|f| {
                Edge::between(&self.vertices[f.vertices[0]], &self.vertices[f.vertices[1]])
                    .expect("edge endpoints differ")
            })
            .collect()
    }

    /// Edge face joining vertices `i` and `j`, if any.
    pub fn edge_face(&self, i: usize, j: usize) -> Option<&Face> {
        let key = if i < j { [i, j] } else { [j, i] };
        self.faces_of_dim(1).find(|f| f.vertices == key)
    }

    /// Euclidean volume, from a pulling triangulation.
    pub fn volume(&self) -> Rational {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut factorial = Rational::one();
        for k in 2..=self.dim {
            factorial *= Rational::from_integer(k.into());
        }
        self.triangulate(&all, self.dim)
            .iter()
            .map(|s| {
                let base = &self.vertices[s[0]];
                let rows: Vec<Vec<Rational>> = s[1..]
                    .iter()
                    .map(|&i| (&self.vertices[i] - base).into_coords())
                    .collect();
                determinant(&rows).abs()
            })
            .sum::<Rational>()
            / factorial
    }

    /// Simplices (as vertex index lists) triangulating the face with the
    /// given vertex set and dimension, coning from its smallest vertex.
    fn triangulate(&self, face: &[usize], dim: usize) -> Vec<Vec<usize>> {
        if dim == 0 {
            return vec![face.to_vec()];
        }
        let apex = face[0];
        let mut out = Vec::new();
        for sub in self.faces() {
            if sub.dim + 1 != dim || sub.vertices.contains(&apex) || !is_sorted_subset(&sub.vertices, face) {
                continue;
            }
            for mut simplex in self.triangulate(&sub.vertices, dim - 1) {
                simplex.push(apex);
                out.push(simplex);
            }
        }
        out
    }
}

fn hull_1d(pts: Vec<Point>) -> Polytope {
    let lo = pts.first().unwrap().clone();
    let hi = pts.last().unwrap().clone();
    let facets = vec![
        Halfspace::from_ints(&[1], hi[0].clone()).unwrap(),
        Halfspace::from_ints(&[-1], -lo[0].clone()).unwrap(),
    ];
    Polytope::from_parts(1, vec![lo, hi], facets)
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Monotone chain on sorted, deduplicated points.
fn incidence_scan(vertices: &[Point], facets: &[Halfspace]) -> Vec<Vec<usize>> {
    facets
        .iter()
        .map(|h| (0..vertices.len()).filter(|&i| h.is_tight(&vertices[i])).collect())
        .collect()
}

fn hull_2d(pts: Vec<Point>) -> Polytope {
    let mut chain: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = chain.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while chain.len() >= start + 2 && !cross(&chain[chain.len() - 2], &chain[chain.len() - 1], p).is_positive()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain.pop();
    }
    // Edge i of the counterclockwise chain joins chain[i] and chain[i + 1],
    // and strict turns leave no other point on it.
    let n = chain.len();
    let mut vertices = chain.clone();
    vertices.sort();
    let index = |p: &Point| vertices.binary_search(p).expect("chain point");
    let mut edges: Vec<(Halfspace, Vec<usize>)> = (0..n)
        .map(|i| {
            let a = &chain[i];
            let b = &chain[(i + 1) % n];
            let normal = [&b[1] - &a[1], &a[0] - &b[0]];
            let offset = &normal[0] * &a[0] + &normal[1] * &a[1];
            let h = Halfspace::from_rational_normal(&normal, &offset).unwrap();
            let mut on = vec![index(a), index(b)];
            on.sort_unstable();
            (h, on)
        })
        .collect();
    edges.sort();
    let (facets, incidence) = edges.into_iter().unzip();
    Polytope::assemble(2, vertices, facets, incidence)
}

/// Tests every `d`-subset of points as a supporting hyperplane.
fn hull_brute_force(dim: usize, pts: Vec<Point>) -> Polytope {
    let mut facets: BTreeSet<Halfspace> = BTreeSet::new();
    for subset in (0..pts.len()).combinations(dim) {
        let base = &pts[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..].iter().map(|&i| (&pts[i] - base).into_coords()).collect();
        let ns = nullspace(&rows, dim);
        if ns.len() != 1 {
            continue;
        }
        let Ok(h) = Halfspace::from_rational_normal(&ns[0], &Rational::zero()) else {
            continue;
        };
        let level = base.dot_int(h.normal());
        let h = Halfspace::new(h.normal().to_vec(), level).unwrap();
        if facets.contains(&h) || facets.contains(&h.flipped()) {
            continue;
        }
        let (mut below, mut above) = (false, false);
        for p in &pts {
            let s = h.slack(p);
            below |= s.is_positive();
            above |= s.is_negative();
            if below && above {
                break;
            }
        }
        match (below, above) {
            (true, false) => {
                facets.insert(h);
            }
            (false, true) => {
                facets.insert(h.flipped());
            }
            _ => {}
        }
    }
    let facets: Vec<Halfspace> = facets.into_iter().collect();
    let vertices = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|h| h.is_tight(p))
                .map(Halfspace::normal_rational)
                .collect();
            rank(&tight) == dim
        })
        .collect();
    Polytope::from_parts(dim, vertices, facets)
}

/// Feasible basic solutions of the system: every `d`-subset with a unique
/// intersection point satisfying all halfspaces.
pub(crate) fn enumerate_vertices(dim: usize, hs: &[Halfspace]) -> Vec<Point> {
    let mut found: BTreeSet<Point> = BTreeSet::new();
    for subset in (0..hs.len()).combinations(dim) {
        let a: Vec<Vec<Rational>> = subset.iter().map(|&i| hs[i].normal_rational()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| hs[i].offset().clone()).collect();
        let Some(x) = solve(&a, &b) else {
            continue;
        };
        let x = Point::new(x);
        if !found.contains(&x) && hs.iter().all(|h| h.contains(&x)) {
            found.insert(x);
        }
    }
    found.into_iter().collect()
}

/// Whether `{x : A x <= 0}` has a nonzero element, assuming `rank A = d`.
fn has_recession_ray(dim: usize, normals: &[Vec<Rational>]) -> bool {
    (0..normals.len()).combinations(dim - 1).any(|subset| {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let ns = nullspace(&rows, dim);
        if ns.len() != 1 {
            return false;
        }
        let dots: Vec<Rational> = normals
            .iter()
            .map(|n| n.iter().zip(&ns[0]).map(|(a, b)| a * b).sum())
            .collect();
        dots.iter().all(|d: &Rational| !d.is_positive()) || dots.iter().all(|d| !d.is_negative())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;
    use crate::rational::{int, rat};

    fn simplex2() -> Polytope {
        Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap()
    }

    fn cube3() -> Polytope {
        let pts: Vec<Point> = (0..8).map(|i: i64| pt![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        Polytope::hull(&pts).unwrap()
    }

    #[test]
    fn hull_of_triangle() {
        let p = simplex2();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.facets().len(), 3);
        let q = Polytope::hull(&[pt![0, 0], pt![(3, 2), 0], pt![0, (3, 2)]]).unwrap();
        assert_eq!(q.vertices(), &[pt![0, 0], pt![0, (3, 2)], pt![(3, 2), 0]]);
        let r = Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, 1], pt![(1, 4), (1, 4)]]).unwrap();
        assert_eq!(r, p);
    }

    #[test]
    fn hull_rejects_degenerate_input() {
        assert_eq!(Polytope::hull(&[]), Err(Error::EmptyInput));
        assert_eq!(
            Polytope::hull(&[pt![0, 0], pt![1, 1], pt![2, 2]]),
            Err(Error::NotFullDimensional(2))
        );
        assert!(matches!(
            Polytope::hull(&[pt![0, 0], pt![1, 0, 0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn collinear_boundary_points_are_not_vertices() {
        let p = Polytope::hull(&[pt![0, 0], pt![1, 0], pt![2, 0], pt![0, 2], pt![1, 1]]).unwrap();
        assert_eq!(p.vertices().len(), 3);
        let c = Polytope::hull(&[
            pt![0, 0, 0],
            pt![2, 0, 0],
            pt![0, 2, 0],
            pt![0, 0, 2],
            pt![1, 0, 0],
            pt![1, 1, 0],
            pt![0, 1, 1],
        ])
        .unwrap();
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c.facets().len(), 4);
    }

    #[test]
    fn halfspaces_to_vertices() {
        let hs = [
            Halfspace::from_ints(&[-1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[0, -1], int(0)).unwrap(),
            Halfspace::from_ints(&[1, 1], int(1)).unwrap(),
        ];
        assert_eq!(Polytope::from_halfspaces(&hs).unwrap(), simplex2());

        let rect = [
            Halfspace::from_ints(&[-1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[1, 0], int(1)).unwrap(),
            Halfspace::from_ints(&[0, -1], int(0)).unwrap(),
            Halfspace::from_ints(&[0, 1], rat(7, 10)).unwrap(),
        ];
        let q = Polytope::from_halfspaces(&rect).unwrap();
        assert!(q.vertices().contains(&pt![1, (7, 10)]));
        assert_eq!(q.vertices().len(), 4);

        assert_eq!(Polytope::from_halfspaces(&hs[..2]), Err(Error::Unbounded));
        let empty = [
            Halfspace::from_ints(&[1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[-1, 0], int(-1)).unwrap(),
        ];
        assert_eq!(Polytope::from_halfspaces(&empty), Err(Error::Empty));
        let empty_bounded = [
            Halfspace::from_ints(&[-1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[0, -1], int(0)).unwrap(),
            Halfspace::from_ints(&[1, 1], int(-1)).unwrap(),
        ];
        assert_eq!(Polytope::from_halfspaces(&empty_bounded), Err(Error::Empty));
        let flat = [
            Halfspace::from_ints(&[-1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[1, 0], int(1)).unwrap(),
            Halfspace::from_ints(&[0, -1], int(0)).unwrap(),
            Halfspace::from_ints(&[0, 1], int(0)).unwrap(),
        ];
        assert_eq!(Polytope::from_halfspaces(&flat), Err(Error::NotFullDimensional(2)));
    }

    #[test]
    fn redundant_halfspaces_are_dropped() {
        let hs = [
            Halfspace::from_ints(&[-1, 0], int(0)).unwrap(),
            Halfspace::from_ints(&[0, -1], int(0)).unwrap(),
            Halfspace::from_ints(&[1, 1], int(1)).unwrap(),
            Halfspace::from_ints(&[1, 0], int(5)).unwrap(),
            Halfspace::from_ints(&[1, 1], int(2)).unwrap(),
        ];
        let p = Polytope::from_halfspaces(&hs).unwrap();
        assert_eq!(p.facets(), simplex2().facets());
    }

    #[test]
    fn minkowski_examples() {
        let sq = Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, 1], pt![1, 1]]).unwrap();
        let sq2 = sq.minkowski_sum(&sq).unwrap();
        assert_eq!(sq2, sq.scale(&int(2)).unwrap());
        let rect = Polytope::hull(&[pt![0, 0], pt![1, 0], pt![0, (7, 10)], pt![1, (7, 10)]]).unwrap();
        let sum = sq.minkowski_sum(&rect).unwrap();
        assert_eq!(
            sum.vertices(),
            &[pt![0, 0], pt![0, (17, 10)], pt![2, 0], pt![2, (17, 10)]]
        );
        assert!(matches!(
            sq.minkowski_sum(&cube3()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn scaling() {
        let p = simplex2();
        assert_eq!(p.scale(&int(2)).unwrap().vertices(), &[pt![0, 0], pt![0, 2], pt![2, 0]]);
        assert_eq!(p.scale(&int(1)).unwrap(), p);
        assert_eq!(p.scale(&int(0)), Err(Error::NonPositiveScale("0".into())));
        assert!(p.scale(&rat(-1, 2)).is_err());
        let q = p.scale(&rat(3, 2)).unwrap();
        assert_eq!(q, Polytope::hull(&[pt![0, 0], pt![(3, 2), 0], pt![0, (3, 2)]]).unwrap());
        assert_eq!(q.facets(), Polytope::hull(q.vertices()).unwrap().facets());
    }

    #[test]
    fn face_counts() {
        let p = simplex2();
        assert_eq!(p.faces().len(), 7);
        assert_eq!(p.faces_of_dim(0).count(), 3);
        assert_eq!(p.faces_of_dim(1).count(), 3);
        let hex = Polytope::hull(&[pt![0, 0], pt![3, 0], pt![3, -2], pt![2, -3], pt![-1, -3], pt![-1, -1]]).unwrap();
        assert_eq!(hex.faces_of_dim(0).count(), 6);
        assert_eq!(hex.faces_of_dim(1).count(), 6);
        let c = cube3();
        assert_eq!(c.faces().len(), 27);
        assert_eq!(c.faces_of_dim(1).count(), 12);
        assert_eq!(c.faces_of_dim(2).count(), 6);
    }

    #[test]
    fn edges_and_lattice_lengths() {
        let e = Edge::between(&pt![0, 0], &pt![3, 0]).unwrap();
        assert_eq!(e.direction, vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(e.length, int(3));
        let e = Edge::between(&pt![(3, 2), 0], &pt![0, (3, 2)]).unwrap();
        assert_eq!(e.direction, vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(e.length, rat(3, 2));
        let e = Edge::between(&pt![0, 0], &pt![1, 2]).unwrap();
        assert_eq!(e.direction, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(e.length, int(1));
        let q = simplex2().scale(&rat(3, 2)).unwrap();
        let mut lengths: Vec<Rational> = q.edges().into_iter().map(|e| e.length).collect();
        lengths.sort();
        assert_eq!(lengths, vec![rat(3, 2); 3]);
    }

    #[test]
    fn membership_and_containment() {
        let p = simplex2();
        assert!(p.contains(&pt![(1, 3), (1, 3)]).unwrap());
        assert!(!p.contains(&pt![1, 1]).unwrap());
        let p2 = p.scale(&int(2)).unwrap();
        assert!(p2.contains(&pt![1, 1]).unwrap());
        assert!(p.contains(&pt![1, 1, 1]).is_err());
        assert!(p.is_contained_in(&p2).unwrap());
        assert!(!p2.is_contained_in(&p).unwrap());
    }

    #[test]
    fn volumes() {
        assert_eq!(simplex2().volume(), rat(1, 2));
        assert_eq!(cube3().volume(), int(1));
        assert_eq!(cube3().scale(&rat(1, 2)).unwrap().volume(), rat(1, 8));
        let seg = Polytope::hull(&[pt![(1, 3)], pt![2]]).unwrap();
        assert_eq!(seg.volume(), rat(5, 3));
        assert_eq!(seg.faces().len(), 3);
    }
}

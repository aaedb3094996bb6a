//! Normal fans, fan refinement and the induced face map.
//!
//! Membership of a functional `a` in the normal cone `C_F` is decided by
//! maximization: `a ∈ C_F` iff every vertex of `F` maximizes `a` over the
//! polytope.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::polytope::{Edge, Face, Polytope};
use crate::rational::Rational;

/// Cone spanned by primitive outer facet normals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    generators: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn new(mut generators: Vec<Vec<BigInt>>) -> Self {
        generators.sort();
        generators.dedup();
        Cone { generators }
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Sum of the generators, a point of the relative interior.
    pub fn interior_point(&self, dim: usize) -> Vec<BigInt> {
        let mut sum = vec![BigInt::zero(); dim];
        for g in &self.generators {
            for (s, x) in sum.iter_mut().zip(g) {
                *s += x;
            }
        }
        sum
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                let c: Vec<String> = g.iter().map(ToString::to_string).collect();
                format!("({})", c.join(", "))
            })
            .collect();
        write!(f, "cone{{{}}}", gens.join(", "))
    }
}

/// The normal fan: one cone per nonempty face.
#[derive(Clone, Debug)]
pub struct Fan {
    cones: BTreeMap<Face, Cone>,
}

impl Fan {
    pub fn cone(&self, face: &Face) -> Option<&Cone> {
        self.cones.get(face)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Face, &Cone)> {
        self.cones.iter()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

pub fn normal_cone(p: &Polytope, face: &Face) -> Cone {
    Cone::new(
        p.facets_containing(face)
            .into_iter()
            .map(|i| p.facets()[i].normal().to_vec())
            .collect(),
    )
}

pub fn normal_fan(p: &Polytope) -> Fan {
    Fan {
        cones: p.faces().iter().map(|f| (f.clone(), normal_cone(p, f))).collect(),
    }
}

/// Indices of the vertices maximizing `a . x`.
pub fn maximizers(p: &Polytope, a: &[BigInt]) -> Vec<usize> {
    let values: Vec<Rational> = p.vertices().iter().map(|v| v.dot_int(a)).collect();
    let best = values.iter().max().expect("polytopes have vertices");
    (0..values.len()).filter(|&i| &values[i] == best).collect()
}

/// `a ∈ C_F`.
pub fn in_normal_cone(p: &Polytope, face: &Face, a: &[BigInt]) -> bool {
    let best = maximizers(p, a);
    face.vertex_indices().iter().all(|i| best.contains(i))
}

/// `a ∈ C_w` for a vertex `w` of `q`.
pub fn cone_in_vertex_cone(a: &[BigInt], q: &Polytope, w: &Point) -> Result<bool> {
    if a.len() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            found: a.len(),
        });
    }
    let idx = q.vertex_index(w).ok_or_else(|| Error::NotAVertex(w.to_string()))?;
    Ok(maximizers(q, a).contains(&idx))
}

/// Whether `N(p)` refines `N(q)`: every vertex cone of `p` lies in some
/// vertex cone of `q`. For complete fans the maximal cones suffice.
pub fn refines(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(p.faces_of_dim(0).all(|v| {
        let cone = normal_cone(p, v);
        (0..q.vertices().len()).any(|w| cone.generators().iter().all(|g| maximizers(q, g).contains(&w)))
    }))
}

/// `Φ(F)`: the face of `q` whose normal cone is the smallest cone of `N(q)`
/// containing `C_F`. Found as the face of `q` maximized by a relative
/// interior point of `C_F`.
pub fn phi(p: &Polytope, q: &Polytope, face: &Face) -> Result<Face> {
    if !refines(p, q)? {
        return Err(Error::NotRefining);
    }
    Ok(phi_unchecked(p, q, face))
}

fn phi_unchecked(p: &Polytope, q: &Polytope, face: &Face) -> Face {
    let c = normal_cone(p, face).interior_point(p.dim());
    q.face_with_vertices(&maximizers(q, &c))
        .expect("maximizer sets are faces")
        .clone()
}

/// `Φ` tabulated over every face of the source.
#[derive(Clone, Debug)]
pub struct FaceMap {
    pub source: Polytope,
    pub target: Polytope,
    pub assignment: BTreeMap<Face, Face>,
}

impl FaceMap {
    /// `F ⊆ F'` implies `Φ(F) ⊆ Φ(F')` for all pairs.
    pub fn is_inclusion_preserving(&self) -> bool {
        self.assignment.iter().all(|(f, img)| {
            self.assignment
                .iter()
                .filter(|(g, _)| f.is_subface_of(g))
                .all(|(_, img2)| img.is_subface_of(img2))
        })
    }
}

pub fn face_map(p: &Polytope, q: &Polytope) -> Result<FaceMap> {
    if !refines(p, q)? {
        return Err(Error::NotRefining);
    }
    Ok(FaceMap {
        source: p.clone(),
        target: q.clone(),
        assignment: p.faces().iter().map(|f| (f.clone(), phi_unchecked(p, q, f))).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    Pass,
    Fail,
    /// `Φ` sends the edge to a vertex; no length constraint applies.
    Collapsed,
}

#[derive(Clone, Debug)]
pub struct EdgePair {
    pub source: Edge,
    pub image: Vec<Point>,
    pub target: Option<Edge>,
    pub status: EdgeStatus,
}

#[derive(Clone, Debug)]
pub struct EdgeReport {
    pub factor: Rational,
    pub pairs: Vec<EdgePair>,
    pub all_pass: bool,
    pub reading: &'static str,
}

pub const COLLAPSED_EDGE_READING: &str = "edges mapped to a vertex impose no length constraint";

/// Checks `ℓ(e) >= factor * ℓ(Φ(e))` for every edge `e` of `p` whose image
/// is an edge of `q`.
pub fn edge_hypothesis(p: &Polytope, q: &Polytope, factor: &Rational) -> Result<EdgeReport> {
    if !refines(p, q)? {
        return Err(Error::NotRefining);
    }
    let pairs: Vec<EdgePair> = p
        .faces_of_dim(1)
        .map(|f| {
            let ends = p.face_points(f);
            let source = Edge::between(ends[0], ends[1]).expect("distinct endpoints");
            let img = phi_unchecked(p, q, f);
            let image: Vec<Point> = q.face_points(&img).into_iter().cloned().collect();
            let target = (img.dim() == 1).then(|| Edge::between(&image[0], &image[1]).unwrap());
            let status = match &target {
                None => EdgeStatus::Collapsed,
                Some(t) if source.length >= factor * &t.length => EdgeStatus::Pass,
                Some(_) => EdgeStatus::Fail,
            };
            EdgePair {
                source,
                image,
                target,
                status,
            }
        })
        .collect();
    let all_pass = pairs.iter().all(|e| e.status != EdgeStatus::Fail);
    Ok(EdgeReport {
        factor: factor.clone(),
        pairs,
        all_pass,
        reading: COLLAPSED_EDGE_READING,
    })
}

/// With a vertex `v` of `p` and its image `w = Φ(v)` both moved to the
/// origin, checks `q - w ⊆ (1/factor)(p - v)`, for every vertex `v`.
pub fn inner_containment(q: &Polytope, p: &Polytope, factor: &Rational) -> Result<bool> {
    if !refines(p, q)? {
        return Err(Error::NotRefining);
    }
    let shrink = Rational::from_integer(1.into()) / factor;
    for vf in p.faces_of_dim(0) {
        let v = &p.vertices()[vf.vertex_indices()[0]];
        let img = phi_unchecked(p, q, vf);
        let w = &q.vertices()[img.vertex_indices()[0]];
        let qn = q.translate(&w.neg());
        let pn = p.translate(&v.neg()).scale(&shrink)?;
        if !qn.is_contained_in(&pn)? {
            return Ok(false);
        }
    }
    Ok(true)
}

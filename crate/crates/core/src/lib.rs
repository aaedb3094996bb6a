pub mod covering;
pub mod error;
pub mod fan;
pub mod halfspace;
pub mod lattice;
pub mod linalg;
pub mod paperlab;
pub mod point;
pub mod polytope;
pub mod rational;

pub use covering::{
    convex_normal_at, is_covered, k_convex_normal, pair_convex_normal, subtract, CheckMode, ConvexCell, CoverVerdict,
    KConvexNormalReport,
};
pub use error::{Error, Result};
pub use fan::{
    cone_in_vertex_cone, edge_hypothesis, face_map, normal_fan, phi, refines, Cone, EdgeReport, EdgeStatus, FaceMap,
    Fan,
};
pub use halfspace::Halfspace;
pub use lattice::{g_set, idp_pair, idp_single, lattice_points, sumset, Budget, IdpVerdict, PointSet};
pub use point::Point;
pub use polytope::{lattice_length, Edge, Face, Polytope};
pub use rational::Rational;

//! Worked examples with their expected outcomes, runnable one by one.

use std::fmt;

use itertools::Itertools;

use crate::covering::{convex_normal_at, pair_convex_normal};
use crate::error::{Error, Result};
use crate::fan::{face_map, phi, refines};
use crate::lattice::{g_set, idp_pair, idp_single, lattice_points, sumset, Budget, PointSet};
use crate::point::Point;
use crate::polytope::Polytope;
use crate::pt;
use crate::rational::{int, rat};

use super::fixtures::*;
use super::harness::interval_base_case;

/// Expected versus observed outcome of one example.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub name: &'static str,
    pub summary: &'static str,
    pub passed: bool,
    pub expected: String,
    pub observed: String,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}: {}", self.name, self.summary)?;
        if !self.passed {
            write!(f, "\n    expected: {}\n    observed: {}", self.expected, self.observed)?;
        }
        Ok(())
    }
}

pub struct ExampleCase {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(Budget) -> Result<(bool, String, String)>,
}

impl ExampleCase {
    pub fn run(&self, budget: Budget) -> Result<CaseResult> {
        let (passed, expected, observed) = (self.run)(budget)?;
        Ok(CaseResult {
            name: self.name,
            summary: self.summary,
            passed,
            expected,
            observed,
        })
    }
}

fn show(points: &PointSet) -> String {
    format!("{{{}}}", points.iter().join(", "))
}

fn compare_sets(expected: PointSet, observed: PointSet) -> (bool, String, String) {
    (expected == observed, show(&expected), show(&observed))
}

fn points(list: Vec<Point>) -> PointSet {
    let d = list[0].dim();
    PointSet::from_points(d, list).expect("uniform dimension")
}

pub static CATALOG: &[ExampleCase] = &[
    ExampleCase {
        name: "gset-1.5-simplex",
        summary: "G-set of the 3/2-dilated triangle has 9 points",
        run: |b| {
            let expected = points(vec![
                pt![0, 0],
                pt![1, 0],
                pt![0, 1],
                pt![(3, 2), 0],
                pt![(1, 2), 0],
                pt![(1, 2), 1],
                pt![0, (3, 2)],
                pt![0, (1, 2)],
                pt![1, (1, 2)],
            ]);
            Ok(compare_sets(expected, g_set(&simplex_three_halves(), b)?))
        },
    },
    ExampleCase {
        name: "lattice-points-1.5-simplex",
        summary: "the 3/2-dilated triangle contains only the lattice points of the unit triangle",
        run: |b| {
            let expected = points(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
            Ok(compare_sets(expected, lattice_points(&simplex_three_halves(), b)?))
        },
    },
    ExampleCase {
        name: "simplex-1.5-2cn",
        summary: "the 3/2-dilated triangle is 2-convex-normal",
        run: |b| {
            let v = convex_normal_at(&simplex_three_halves(), &int(2), b)?;
            Ok((v.covered, "covered".into(), v.to_string()))
        },
    },
    ExampleCase {
        name: "simplex-not-2cn",
        summary: "the unit triangle is not 2-convex-normal; the gap is conv{(1,0),(0,1),(1,1)}",
        run: |b| {
            let v = convex_normal_at(&standard_simplex(2), &int(2), b)?;
            let gap = Polytope::hull(&[pt![1, 0], pt![0, 1], pt![1, 1]])?;
            let ok = !v.covered
                && v.residual_cells.len() == 1
                && v.residual_cells[0].to_polytope() == gap
                && v.witness.as_ref().is_some_and(|w| gap.contains_point(w));
            Ok((
                ok,
                "uncovered, residual conv{(0, 1), (1, 0), (1, 1)}".into(),
                v.to_string(),
            ))
        },
    },
    ExampleCase {
        name: "p3-not-idp",
        summary: "(1,1,1) in 2P is not a sum of two lattice points of the tetrahedron",
        run: |b| {
            let v = idp_single(&non_idp_tetrahedron(), 2, b)?;
            Ok((
                !v.holds && v.witness == Some(pt![1, 1, 1]),
                "fails at (1, 1, 1)".into(),
                v.to_string(),
            ))
        },
    },
    ExampleCase {
        name: "polygon-idp",
        summary: "lattice polygons have the integer decomposition property (checked to k = 4)",
        run: |b| {
            let mut observed = Vec::new();
            let mut ok = true;
            for p in [standard_simplex(2), hexagon(), thin_triangle_pair(1, 2, 3).1] {
                let v = idp_single(&p, 4, b)?;
                ok &= v.holds;
                observed.push(v.to_string());
            }
            Ok((ok, "holds for all".into(), observed.join("; ")))
        },
    },
    ExampleCase {
        name: "diagonal-pairs",
        summary: "(1.5T, 1.5T) is convex-normal, (T, T) is not but has the pair decomposition property",
        run: |b| {
            let t = standard_simplex(2);
            let t15 = simplex_three_halves();
            let a = pair_convex_normal(&t15, &t15, b)?.covered;
            let c = pair_convex_normal(&t, &t, b)?.covered;
            let idp = idp_pair(&t, &t, b)?.holds;
            Ok((
                a && !c && idp,
                "covered, uncovered, decomposition holds".into(),
                format!("{a}, {c}, {idp}"),
            ))
        },
    },
    ExampleCase {
        name: "pair-asymmetry",
        summary: "G(Q) + P = Q + P but G(P) + Q != P + Q for the square and the 0.7 rectangle",
        run: |b| {
            let (sq, rect) = (unit_square(), rectangle_07());
            let qp = pair_convex_normal(&rect, &sq, b)?;
            let pq = pair_convex_normal(&sq, &rect, b)?;
            Ok((
                qp.covered && !pq.covered,
                "(Q,P) covered, (P,Q) uncovered".into(),
                format!("(Q,P) {qp}; (P,Q) {pq}"),
            ))
        },
    },
    ExampleCase {
        name: "rect-minkowski",
        summary: "square + rectangle = [0,2] x [0,17/10]",
        run: |_| {
            let sum = unit_square().minkowski_sum(&rectangle_07())?;
            let expected = Polytope::hull(&[pt![0, 0], pt![2, 0], pt![0, (17, 10)], pt![2, (17, 10)]])?;
            Ok((sum == expected, expected.to_string(), sum.to_string()))
        },
    },
    ExampleCase {
        name: "cex-family-1-2-3",
        summary: "thin triangles with n=1, k=2, l=3: no pair decomposition, not convex-normal",
        run: |b| {
            let (q, p) = thin_triangle_pair(1, 2, 3);
            let idp = idp_pair(&q, &p, b)?;
            let cn = pair_convex_normal(&q, &p, b)?;
            let sum_points = lattice_points(&q.minkowski_sum(&p)?, b)?;
            let decomposable = sumset(&lattice_points(&q, b)?, &lattice_points(&p, b)?)?;
            let witness_ok = idp
                .witness
                .as_ref()
                .is_some_and(|w| sum_points.contains(w) && !decomposable.contains(w));
            Ok((
                !idp.holds && witness_ok && !cn.covered,
                "decomposition fails with a verified witness; uncovered".into(),
                format!("{idp}; {cn}"),
            ))
        },
    },
    ExampleCase {
        name: "phi-hexagon",
        summary: "the hexagon's fan refines the square's and Φ sends edge (-1,-1)-(0,0) to (0,0)",
        run: |_| {
            let (h, q) = (hexagon(), quad());
            let i = h.vertex_index(&pt![-1, -1]).expect("vertex");
            let j = h.vertex_index(&pt![0, 0]).expect("vertex");
            let e = h.edge_face(i, j).expect("edge").clone();
            let img = phi(&h, &q, &e)?;
            let image: Vec<&Point> = q.face_points(&img);
            let ok = refines(&h, &q)? && image == vec![&pt![0, 0]] && face_map(&h, &q)?.is_inclusion_preserving();
            Ok((
                ok,
                "Φ(e) = (0, 0)".into(),
                format!("Φ(e) = {}", image.iter().join(", ")),
            ))
        },
    },
    ExampleCase {
        name: "interval-base-case",
        summary: "([0,m],[0,q]) is convex-normal when q >= min(1, m)",
        run: |b| {
            let mut ok = true;
            let mut observed = Vec::new();
            for (q, m) in [(rat(5, 2), rat(3, 2)), (int(1), int(100)), (rat(1, 2), rat(1, 3))] {
                let c = interval_base_case(&q, &m, b)?;
                ok &= c.hypothesis && c.convex_normal;
                observed.push(format!("q={q}, m={m}: {}", c.convex_normal));
            }
            Ok((ok, "all convex-normal".into(), observed.join("; ")))
        },
    },
];

pub fn catalog() -> &'static [ExampleCase] {
    CATALOG
}

pub fn run_example(name: &str, budget: Budget) -> Result<CaseResult> {
    CATALOG
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))?
        .run(budget)
}

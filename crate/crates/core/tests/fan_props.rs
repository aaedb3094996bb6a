use polynormal_core::fan::{face_map, inner_containment, normal_cone, normal_fan, phi, refines};
use polynormal_core::paperlab::{gen_theorem_pair, PairParams};
use polynormal_core::{Point, Polytope, Rational};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=2).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn polytope(d: usize, max_points: usize) -> impl Strategy<Value = Polytope> {
    prop::collection::vec(
        prop::collection::vec(coord(), d).prop_map(Point::new),
        d + 1..=max_points,
    )
    .prop_filter_map("degenerate", |pts| Polytope::hull(&pts).ok())
}

fn any_polytope() -> impl Strategy<Value = Polytope> {
    prop_oneof![polytope(2, 7), polytope(3, 7)]
}

fn cone_contains(outer: &[Vec<num_bigint::BigInt>], p: &Polytope, face: &polynormal_core::Face) -> bool {
    outer.iter().all(|g| polynormal_core::fan::in_normal_cone(p, face, g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn face_cone_correspondence_reverses_inclusion(p in any_polytope()) {
        let fan = normal_fan(&p);
        for (f, _) in fan.iter() {
            for (g, cg) in fan.iter() {
                // C_G ⊆ C_F  <=>  F ⊆ G
                prop_assert_eq!(cone_contains(cg.generators(), &p, f), f.is_subface_of(g));
            }
        }
    }

    #[test]
    fn dilates_refine_each_other(p in any_polytope(), n in 1i64..5, m in 1i64..4) {
        let c = Rational::new(n.into(), m.into());
        let scaled = p.scale(&c).unwrap();
        prop_assert!(refines(&p, &scaled).unwrap());
        prop_assert!(refines(&scaled, &p).unwrap());
        let map = face_map(&p, &scaled).unwrap();
        prop_assert!(map.assignment.iter().all(|(f, g)| f == g));
    }

    #[test]
    fn refinement_is_transitive(a in polytope(2, 6), b in polytope(2, 6)) {
        let ab = a.minkowski_sum(&b).unwrap();
        // N(a + b) refines both N(a) and N(b); N(a) refines itself.
        prop_assert!(refines(&ab, &a).unwrap());
        prop_assert!(refines(&ab, &b).unwrap());
        let abb = ab.minkowski_sum(&b).unwrap();
        prop_assert!(refines(&abb, &ab).unwrap());
        prop_assert!(refines(&abb, &a).unwrap());
    }

    #[test]
    fn phi_preserves_inclusions(a in polytope(2, 6), b in polytope(2, 6)) {
        let p = a.minkowski_sum(&b).unwrap();
        let map = face_map(&p, &a).unwrap();
        prop_assert!(map.is_inclusion_preserving());
        // Φ(F) is the face of a whose cone is the smallest containing C_F.
        for (f, img) in &map.assignment {
            let cf = normal_cone(&p, f);
            prop_assert!(cone_contains(cf.generators(), &a, img));
        }
    }

    #[test]
    fn mutually_refining_maps_are_inverse(p in polytope(2, 6), n in 1i64..4) {
        let q = p.scale(&Rational::from_integer(n.into())).unwrap().translate(&Point::from_ints(&[1, -2]));
        for f in p.faces() {
            let there = phi(&p, &q, f).unwrap();
            prop_assert_eq!(&phi(&q, &p, &there).unwrap(), f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_pairs_satisfy_normalized_containment(seed in any::<u64>(), d in 1usize..=2) {
        let (q, p) = gen_theorem_pair(seed, d, &PairParams::default()).unwrap();
        prop_assert!(inner_containment(&q, &p, &Rational::from_integer(d.into())).unwrap());
    }
}

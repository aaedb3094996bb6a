use polynormal_core::lattice::Budget;
use polynormal_core::paperlab::*;
use polynormal_core::rational::{int, rat};

#[test]
fn every_catalog_case_passes() {
    for case in catalog() {
        let r = case.run(Budget::default()).unwrap();
        println!("{r}");
        assert!(r.passed, "{r}");
    }
}

#[test]
fn unknown_example_is_an_error() {
    assert!(run_example("no-such-case", Budget::default()).is_err());
    assert!(run_example("phi-hexagon", Budget::default()).unwrap().passed);
}

#[test]
fn theorem_harness_small() {
    for d in [1, 2] {
        let r = harness_main_b(20, d, 1, &PairParams::default(), Budget::default());
        println!("{r}");
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn controls_fail_sometimes() {
    let r = harness_controls(20, 2, 1, &rat(1, 4), &PairParams::default(), Budget::default()).unwrap();
    println!("control failure rate {}", r.failure_rate());
    assert!(!r.uncovered.is_empty());
}

#[test]
fn lemma_a_harness_small() {
    let r = harness_lemma_a(20, 3, Budget::default());
    println!("{r}");
    assert!(r.passed(), "{r}");
}

#[test]
fn main_lemma_chain() {
    let p = fixtures::standard_simplex(2).scale(&int(3)).unwrap();
    let r = harness_main_lemma(&p, 5, 3, Budget::default()).unwrap();
    println!("{r}");
    assert!(r.passed() && r.trials > 0);
    let r = harness_main_lemma(&fixtures::standard_simplex(2), 5, 0, Budget::default()).unwrap();
    assert_eq!(r.trials, 0);
}

#[test]
fn interval_cases() {
    let c = interval_base_case(&rat(1, 3), &rat(1, 2), Budget::default()).unwrap();
    assert!(!c.hypothesis);
    println!("{c:?}");
}

#[test]
fn aggregate_harnesses() {
    let r = harness_sum(4, 2, 11, Budget::default());
    println!("{r}");
    assert!(r.passed(), "{r}");
    let r = harness_main_lemma_random(3, 5, 4, 2, Budget::default()).unwrap();
    println!("{r}");
    assert!(r.passed() && r.trials > 0, "{r}");
}

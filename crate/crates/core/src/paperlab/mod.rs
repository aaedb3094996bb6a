//! Worked examples, instance generators and randomized harnesses for the
//! convex-normality results.

pub mod catalog;
pub mod fixtures;
pub mod generate;
pub mod harness;

pub use catalog::{catalog, run_example, CaseResult, ExampleCase};
pub use generate::{gen_control_pair, gen_sum_instance, gen_theorem_pair, PairParams};
pub use harness::{
    harness_controls, harness_lemma_a, harness_main_b, harness_main_lemma, harness_main_lemma_random, harness_sum,
    harness_sum_corollary, interval_base_case, ControlReport, IntervalCase, SumCorollaryOutcome, TrialFailure,
    TrialReport,
};

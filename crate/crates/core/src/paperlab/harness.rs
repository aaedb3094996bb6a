//! Randomized checks of the universally quantified statements.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::One;
use rayon::prelude::*;

use crate::covering::{convex_normal_at, grid_values, pair_convex_normal};
use crate::error::Result;
use crate::fan::inner_containment;
use crate::lattice::{lemma_a_holds, Budget};
use crate::polytope::Polytope;
use crate::rational::Rational;

use super::generate::{gen_control_pair, gen_sum_instance, gen_theorem_pair, random_lattice_polytope, rng, PairParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFailure {
    pub seed: u64,
    pub instance: String,
    pub discrepancy: String,
}

#[derive(Clone, Debug)]
pub struct TrialReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} trial(s), {} failure(s), {:.2?}",
            self.name,
            self.trials,
            self.failures.len(),
            self.elapsed
        )?;
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        for fail in &self.failures {
            write!(f, "\n  seed {}: {} -- {}", fail.seed, fail.discrepancy, fail.instance)?;
        }
        Ok(())
    }
}

fn describe_pair(q: &Polytope, p: &Polytope) -> String {
    format!("Q = {q}, P = {p}")
}

/// Runs `check` for seeds `seed, seed+1, ...` in parallel; failures are
/// reported in seed order.
fn run_seeded<F>(name: &str, trials: usize, seed: u64, check: F) -> TrialReport
where
    F: Fn(u64) -> Result<Option<TrialFailure>> + Sync,
{
    let start = Instant::now();
    let failures: Vec<TrialFailure> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed + i;
            check(s).unwrap_or_else(|e| {
                Some(TrialFailure {
                    seed: s,
                    instance: String::new(),
                    discrepancy: format!("error: {e}"),
                })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    TrialReport {
        name: name.to_string(),
        trials,
        failures,
        notes: Vec::new(),
        elapsed: start.elapsed(),
    }
}

/// Generated pairs satisfying the fan and edge hypotheses must be
/// convex-normal and satisfy the normalized containment `Q ⊆ (1/d) P`.
pub fn harness_main_b(trials: usize, d: usize, seed: u64, params: &PairParams, budget: Budget) -> TrialReport {
    let factor = Rational::from_integer(d.into());
    let mut report = run_seeded(&format!("theorem pairs, d = {d}"), trials, seed, |s| {
        let (q, p) = gen_theorem_pair(s, d, params)?;
        let verdict = pair_convex_normal(&q, &p, budget)?;
        let mut problems = Vec::new();
        if !verdict.covered {
            problems.push(format!("uncovered, witness {}", verdict.witness.unwrap()));
        }
        if !inner_containment(&q, &p, &factor)? {
            problems.push(format!("normalized Q not inside P/{d}"));
        }
        Ok((!problems.is_empty()).then(|| TrialFailure {
            seed: s,
            instance: describe_pair(&q, &p),
            discrepancy: problems.join("; "),
        }))
    });
    report.notes.push(crate::fan::COLLAPSED_EDGE_READING.to_string());
    report
}

/// Counts of a control run: pairs that break the edge-length hypothesis.
#[derive(Clone, Debug)]
pub struct ControlReport {
    pub instances: usize,
    pub uncovered: Vec<u64>,
}

impl ControlReport {
    pub fn failure_rate(&self) -> f64 {
        self.uncovered.len() as f64 / self.instances.max(1) as f64
    }
}

/// Theorem pairs with `P` shrunk by `shrink`; records which seeds lose the
/// covering property.
pub fn harness_controls(
    trials: usize,
    d: usize,
    seed: u64,
    shrink: &Rational,
    params: &PairParams,
    budget: Budget,
) -> Result<ControlReport> {
    let uncovered: Vec<Option<u64>> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed + i;
            let (q, p) = gen_control_pair(s, d, shrink, params)?;
            Ok((!pair_convex_normal(&q, &p, budget)?.covered).then_some(s))
        })
        .collect::<Result<_>>()?;
    Ok(ControlReport {
        instances: trials,
        uncovered: uncovered.into_iter().flatten().collect(),
    })
}

/// If `P` is 2-convex-normal, checks `convex_normal_at(P, c)` for integer
/// `c = 3..=c_max`, and additionally on the rational grid in `[2, 3]` with
/// denominators up to `grid_denom` when it is nonzero.
pub fn harness_main_lemma(p: &Polytope, c_max: u32, grid_denom: u32, budget: Budget) -> Result<TrialReport> {
    let start = Instant::now();
    let mut report = TrialReport {
        name: "integer dilation chain".into(),
        trials: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let two = Rational::from_integer(2.into());
    if !convex_normal_at(p, &two, budget)?.covered {
        report
            .notes
            .push("premise fails: not 2-convex-normal, nothing to check".into());
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    let mut values: Vec<Rational> = (3..=c_max).map(|c| Rational::from_integer(c.into())).collect();
    if grid_denom > 0 {
        let three = Rational::from_integer(3.into());
        values.extend(
            grid_values(&two, &three, grid_denom)
                .into_iter()
                .filter(|c| !c.is_integer()),
        );
        report.notes.push(format!(
            "rational c in (2, 3) grid-verified with denominators <= {grid_denom}"
        ));
    }
    let checks: Vec<(Rational, bool)> = values
        .into_par_iter()
        .map(|c| convex_normal_at(p, &c, budget).map(|v| (c, v.covered)))
        .collect::<Result<_>>()?;
    report.trials = checks.len();
    for (c, covered) in checks {
        if !covered {
            report.failures.push(TrialFailure {
                seed: 0,
                instance: p.to_string(),
                discrepancy: format!("not covered at c = {c}"),
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `G(rP) + G(P) ⊆ G((r+1)P)` for random lattice polytopes in dimension 2
/// or 3 and `r` cycling through fixed and random positive rationals.
pub fn harness_lemma_a(trials: usize, seed: u64, budget: Budget) -> TrialReport {
    use rand::Rng;
    run_seeded("G-set sum inclusion", trials, seed, |s| {
        let mut g = rng(s);
        let d = if s % 4 == 3 { 3 } else { 2 };
        let p = random_lattice_polytope(&mut g, d, 2)?;
        let fixed = [(1, 2), (1, 1), (3, 2), (2, 1), (7, 3)];
        let r = if s % 2 == 0 {
            let (n, m) = fixed[(s / 2 % 5) as usize];
            Rational::new(n.into(), m.into())
        } else {
            Rational::new(g.random_range(1..=9i64).into(), g.random_range(1..=4i64).into())
        };
        Ok((!lemma_a_holds(&p, &r, budget)?).then(|| TrialFailure {
            seed: s,
            instance: format!("P = {p}, r = {r}"),
            discrepancy: "G(rP) + G(P) not inside G((r+1)P)".into(),
        }))
    })
}

#[derive(Clone, Debug)]
pub struct SumCorollaryOutcome {
    pub parts_covered: Vec<bool>,
    /// Verdict for the sum; computed only when every part is covered.
    pub sum_covered: Option<bool>,
}

impl SumCorollaryOutcome {
    pub fn premise_holds(&self) -> bool {
        self.parts_covered.iter().all(|&c| c)
    }

    /// False only when every part is covered but the sum is not.
    pub fn holds(&self) -> bool {
        self.sum_covered != Some(false)
    }
}

pub fn harness_sum_corollary(parts: &[Polytope], p: &Polytope, budget: Budget) -> Result<SumCorollaryOutcome> {
    let parts_covered = parts
        .iter()
        .map(|q| pair_convex_normal(q, p, budget).map(|v| v.covered))
        .collect::<Result<Vec<_>>>()?;
    let sum_covered = if parts_covered.iter().all(|&c| c) {
        let mut sum = parts[0].clone();
        for q in &parts[1..] {
            sum = sum.minkowski_sum(q)?;
        }
        Some(pair_convex_normal(&sum, p, budget)?.covered)
    } else {
        None
    };
    Ok(SumCorollaryOutcome {
        parts_covered,
        sum_covered,
    })
}

/// Random sum instances `(Q_1 + ... + Q_parts, 2(Q_1 + ... + Q_parts) + Z)`.
/// Every part is expected to be covered; a covered premise with an
/// uncovered sum is a failure.
pub fn harness_sum(trials: usize, parts: usize, seed: u64, budget: Budget) -> TrialReport {
    let t = Rational::from_integer(2.into());
    run_seeded("sum of convex-normal parts", trials, seed, |s| {
        let (qs, p) = gen_sum_instance(s, parts, &t)?;
        let outcome = harness_sum_corollary(&qs, &p, budget)?;
        let instance = || {
            let qs: Vec<String> = qs.iter().map(|q| q.to_string()).collect();
            format!("Q_i = [{}], P = {p}", qs.join("; "))
        };
        Ok(if !outcome.premise_holds() {
            Some(TrialFailure {
                seed: s,
                instance: instance(),
                discrepancy: format!("part verdicts {:?}", outcome.parts_covered),
            })
        } else if !outcome.holds() {
            Some(TrialFailure {
                seed: s,
                instance: instance(),
                discrepancy: "every part covered but the sum is not".into(),
            })
        } else {
            None
        })
    })
}

/// Random lattice polygons run through [`harness_main_lemma`]; polygons that
/// are not 2-convex-normal are skipped and counted in a note.
pub fn harness_main_lemma_random(
    polygons: usize,
    seed: u64,
    c_max: u32,
    grid_denom: u32,
    budget: Budget,
) -> Result<TrialReport> {
    let start = Instant::now();
    let two = Rational::from_integer(2.into());
    let mut chosen = Vec::new();
    let mut skipped = 0usize;
    let mut s = seed;
    while chosen.len() < polygons {
        let p = random_lattice_polytope(&mut rng(s), 2, 3)?;
        if convex_normal_at(&p, &two, budget)?.covered {
            chosen.push((s, p));
        } else {
            skipped += 1;
        }
        s += 1;
        if s - seed > 100 * polygons as u64 + 100 {
            return Err(crate::Error::GenerationBudgetExceeded((s - seed) as usize));
        }
    }
    let reports: Vec<(u64, TrialReport)> = chosen
        .par_iter()
        .map(|(s, p)| harness_main_lemma(p, c_max, grid_denom, budget).map(|r| (*s, r)))
        .collect::<Result<_>>()?;
    let mut report = TrialReport {
        name: "integer dilation chain".into(),
        trials: 0,
        failures: Vec::new(),
        notes: vec![format!(
            "{polygons} polygon(s) verified 2-convex-normal, {skipped} candidate(s) skipped"
        )],
        elapsed: Duration::ZERO,
    };
    for (s, r) in reports {
        report.trials += r.trials;
        report
            .failures
            .extend(r.failures.into_iter().map(|f| TrialFailure { seed: s, ..f }));
        for note in r.notes {
            if !report.notes.contains(&note) {
                report.notes.push(note);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The one-dimensional base case: `([0,m], [0,q])` is convex-normal when
/// `q >= min(1, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCase {
    pub hypothesis: bool,
    pub convex_normal: bool,
}

pub fn interval_base_case(q: &Rational, m: &Rational, budget: Budget) -> Result<IntervalCase> {
    let zero = Rational::from_integer(0.into());
    let p_int = super::fixtures::interval(zero.clone(), q.clone());
    let q_int = super::fixtures::interval(zero, m.clone());
    let one = Rational::one();
    Ok(IntervalCase {
        hypothesis: q >= std::cmp::min(m, &one),
        convex_normal: pair_convex_normal(&q_int, &p_int, budget)?.covered,
    })
}

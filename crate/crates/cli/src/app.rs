//! Argument parsing and subcommand dispatch.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use polynormal_core::fan::EdgeStatus;
use polynormal_core::lattice::default_k_max;
use polynormal_core::paperlab::{self, PairParams, TrialReport};
use polynormal_core::rational::parse_rational;
use polynormal_core::{
    convex_normal_at, edge_hypothesis, face_map, g_set, idp_pair, idp_single, k_convex_normal, lattice_points,
    normal_fan, pair_convex_normal, refines, sumset, Budget, CheckMode, CoverVerdict, Face, PointSet, Polytope,
    Rational,
};
use serde_json::{json, Value};

use crate::doc::{point_row, point_rows, PolytopeDocument};
use crate::report::{ReportDocument, Verdict};
use crate::{svg, CliError, BUDGET_ENV};

/// Exact polytope workbench. Exit status: 0 pass, 1 negative verdict, 2 error.
#[derive(Debug, Parser)]
#[command(name = "polynormal", version)]
pub struct Cli {
    /// Human-readable output instead of the JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Lattice-point enumeration budget (candidates); overrides POLYNORMAL_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SetKind {
    Gset,
    Lattice,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Grid,
    IntegerSteps,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Which {
    #[value(name = "mainB")]
    MainB,
    MainLemma,
    Sum,
    LemmaA,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice points of a polytope.
    LatticePoints { file: PathBuf },
    /// G-set: lattice translates of the vertices inside the polytope.
    Gset { file: PathBuf },
    /// Elementwise sum of the point sets of two polytopes.
    Sumset {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "gset")]
        of: SetKind,
    },
    /// Minkowski sum of two polytopes.
    Minkowski { a: PathBuf, b: PathBuf },
    /// Dilation by a positive rational.
    Scale {
        file: PathBuf,
        #[arg(long, value_parser = rational_arg)]
        by: Rational,
    },
    /// Edges with primitive directions and lattice lengths.
    Edges { file: PathBuf },
    /// Integer decomposition check; with --pair, takes Q then P.
    Idp {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        #[arg(long)]
        pair: bool,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// cP = G((c-1)P) + P at one c, or over [2, k].
    ConvexNormal {
        file: PathBuf,
        #[arg(long, value_parser = rational_arg, conflicts_with = "k")]
        c: Option<Rational>,
        #[arg(long, value_parser = rational_arg)]
        k: Option<Rational>,
        #[arg(long, default_value_t = 3)]
        denom: u32,
        #[arg(long, value_enum, default_value = "grid")]
        mode: ModeArg,
    },
    /// Q + P = G(Q) + P, files in (Q, P) order.
    ConvexNormalPair { q: PathBuf, p: PathBuf },
    /// Normal fan: face to cone generators.
    Fan { file: PathBuf },
    /// Whether the normal fan of P refines that of Q.
    Refines { p: PathBuf, q: PathBuf },
    /// Face map from P to Q.
    Phi { p: PathBuf, q: PathBuf },
    /// Edge-length condition between P and Q.
    EdgeCheck {
        #[arg(long, value_parser = rational_arg)]
        factor: Rational,
        p: PathBuf,
        q: PathBuf,
    },
    /// Runs the catalog of worked examples.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Seeded randomized harnesses.
    Harness {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Planar figures.
    Svg {
        #[command(subcommand)]
        figure: Figure,
    },
}

#[derive(Debug, Subcommand)]
pub enum Figure {
    /// cP against the translates of P by G((c-1)P).
    Cover {
        file: PathBuf,
        #[arg(long, value_parser = rational_arg, default_value = "2")]
        c: Rational,
        #[arg(long)]
        out: PathBuf,
    },
    /// Q + P against the translates of P by G(Q).
    Pair {
        q: PathBuf,
        p: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Normal fan of a polygon.
    Fan {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn budget(flag: Option<u64>) -> Result<Budget, CliError> {
    if let Some(n) = flag {
        return Ok(Budget::new(n));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::new)
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

/// Reads a document from a path, or standard input for `-`.
pub fn load(path: &Path) -> Result<Polytope, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?
    };
    let wrap = |source| CliError::Document {
        path: path.display().to_string(),
        source,
    };
    PolytopeDocument::parse(&text)
        .and_then(|d| d.to_polytope())
        .map_err(wrap)
}

pub fn run(cli: Cli) -> Result<ReportDocument, CliError> {
    let start = Instant::now();
    let budget = budget(cli.budget)?;
    let command: Vec<String> = std::env::args().skip(1).collect();
    let report = dispatch(cli.command, budget)?;
    Ok(report.with_context(command, start.elapsed()))
}

fn polytope_json(p: &Polytope) -> Value {
    serde_json::to_value(PolytopeDocument::from_polytope(p, None)).expect("documents serialize")
}

fn points_report(label: &str, set: &PointSet) -> ReportDocument {
    let mut lines = vec![format!("{label}: {} point(s)", set.len())];
    lines.extend(set.iter().map(|p| format!("  {p}")));
    ReportDocument::new(
        Verdict::Info,
        json!({"count": set.len(), "points": point_rows(set.iter())}),
        lines,
    )
}

fn polytope_report(label: &str, p: &Polytope) -> ReportDocument {
    let mut lines = vec![format!("{label}: {} vertices", p.vertices().len())];
    lines.extend(p.vertices().iter().map(|v| format!("  {v}")));
    lines.extend(p.facets().iter().map(|h| format!("  {h}")));
    ReportDocument::new(Verdict::Info, json!({"polytope": polytope_json(p)}), lines)
}

fn cover_json(v: &CoverVerdict) -> Value {
    json!({
        "covered": v.covered,
        "witness": v.witness.as_ref().map(point_row),
        "residual_cells": v.residual_cells.iter().map(|c| point_rows(c.vertices())).collect::<Vec<_>>(),
        "warnings": v.warnings,
    })
}

fn cover_report(v: &CoverVerdict) -> ReportDocument {
    let mut lines = vec![v.to_string()];
    lines.extend(v.warnings.iter().map(|w| format!("warning: {w}")));
    ReportDocument::new(Verdict::from_bool(v.covered), cover_json(v), lines)
}

fn face_json(p: &Polytope, f: &Face) -> Value {
    json!({"dim": f.dim(), "vertices": point_rows(p.face_points(f))})
}

fn face_text(p: &Polytope, f: &Face) -> String {
    let kind = match f.dim() {
        0 => "vertex",
        1 => "edge",
        _ => "face",
    };
    let pts: Vec<String> = p.face_points(f).iter().map(|x| x.to_string()).collect();
    format!("{kind}{{{}}}", pts.join(","))
}

fn trial_report(r: &TrialReport) -> ReportDocument {
    ReportDocument::new(
        Verdict::from_bool(r.passed()),
        json!({
            "name": r.name,
            "trials": r.trials,
            "failures": r.failures.iter().map(|f| json!({
                "seed": f.seed, "instance": f.instance, "discrepancy": f.discrepancy,
            })).collect::<Vec<_>>(),
            "notes": r.notes,
        }),
        r.to_string().lines().map(String::from).collect(),
    )
}

fn dispatch(command: Command, budget: Budget) -> Result<ReportDocument, CliError> {
    Ok(match command {
        Command::LatticePoints { file } => points_report("lattice points", &lattice_points(&load(&file)?, budget)?),
        Command::Gset { file } => points_report("G-set", &g_set(&load(&file)?, budget)?),
        Command::Sumset { a, b, of } => {
            let set = |p: &Polytope| match of {
                SetKind::Gset => g_set(p, budget),
                SetKind::Lattice => lattice_points(p, budget),
            };
            points_report("sumset", &sumset(&set(&load(&a)?)?, &set(&load(&b)?)?)?)
        }
        Command::Minkowski { a, b } => polytope_report("Minkowski sum", &load(&a)?.minkowski_sum(&load(&b)?)?),
        Command::Scale { file, by } => polytope_report("dilation", &load(&file)?.scale(&by)?),
        Command::Edges { file } => {
            let p = load(&file)?;
            let edges = p.edges();
            let rows: Vec<Value> = edges
                .iter()
                .map(|e| {
                    json!({
                        "start": point_row(&e.start),
                        "end": point_row(&e.end),
                        "direction": e.direction.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "length": e.length.to_string(),
                    })
                })
                .collect();
            let mut lines = vec![format!("{} edge(s)", edges.len())];
            lines.extend(
                edges
                    .iter()
                    .map(|e| format!("  {} -- {}  length {}", e.start, e.end, e.length)),
            );
            ReportDocument::new(Verdict::Info, json!({"count": edges.len(), "edges": rows}), lines)
        }
        Command::Idp { files, pair, kmax } => {
            let verdict = match (pair, files.as_slice()) {
                (true, [q, p]) => idp_pair(&load(q)?, &load(p)?, budget)?,
                (false, [p]) => {
                    let p = load(p)?;
                    let k = kmax.unwrap_or_else(|| default_k_max(p.dim()));
                    idp_single(&p, k, budget)?
                }
                (true, _) => return Err(CliError::Usage("--pair takes two files, Q then P".into())),
                (false, _) => return Err(CliError::Usage("idp takes one file, or two with --pair".into())),
            };
            ReportDocument::new(
                Verdict::from_bool(verdict.holds),
                json!({
                    "holds": verdict.holds,
                    "witness": verdict.witness.as_ref().map(point_row),
                    "checked": verdict.checked_range,
                }),
                vec![verdict.to_string()],
            )
        }
        Command::ConvexNormal {
            file,
            c,
            k,
            denom,
            mode,
        } => {
            let p = load(&file)?;
            match (c, k) {
                (Some(c), _) => cover_report(&convex_normal_at(&p, &c, budget)?),
                (None, Some(k)) => {
                    let mode = match mode {
                        ModeArg::Grid => CheckMode::Grid,
                        ModeArg::IntegerSteps => CheckMode::IntegerSteps,
                    };
                    let r = k_convex_normal(&p, &k, denom, mode, budget)?;
                    let mut lines: Vec<String> = r.checks.iter().map(|(c, v)| format!("  c = {c}: {v}")).collect();
                    lines.extend(r.chain.iter().map(|s| format!("  {s}")));
                    lines.push(r.claim.clone());
                    ReportDocument::new(
                        Verdict::from_bool(r.all_pass),
                        json!({
                            "k": r.k.to_string(),
                            "mode": format!("{:?}", r.mode),
                            "all_pass": r.all_pass,
                            "checks": r.checks.iter().map(|(c, v)| json!({"c": c.to_string(), "verdict": cover_json(v)})).collect::<Vec<_>>(),
                            "chain": r.chain,
                            "claim": r.claim,
                        }),
                        lines,
                    )
                }
                (None, None) => return Err(CliError::Usage("convex-normal needs --c or --k".into())),
            }
        }
        Command::ConvexNormalPair { q, p } => cover_report(&pair_convex_normal(&load(&q)?, &load(&p)?, budget)?),
        Command::Fan { file } => {
            let p = load(&file)?;
            let fan = normal_fan(&p);
            let mut rows = Vec::new();
            let mut lines = vec![format!("{} cone(s)", fan.len())];
            for (face, cone) in fan.iter() {
                let gens: Vec<Vec<String>> = cone
                    .generators()
                    .iter()
                    .map(|g| g.iter().map(|x| x.to_string()).collect())
                    .collect();
                rows.push(json!({"face": face_json(&p, face), "generators": gens}));
                lines.push(format!("  {} -> {cone}", face_text(&p, face)));
            }
            ReportDocument::new(Verdict::Info, json!({"cones": rows}), lines)
        }
        Command::Refines { p, q } => {
            let r = refines(&load(&p)?, &load(&q)?)?;
            ReportDocument::new(
                Verdict::from_bool(r),
                json!({"refines": r}),
                vec![format!("N(P) refines N(Q): {r}")],
            )
        }
        Command::Phi { p, q } => {
            let (p, q) = (load(&p)?, load(&q)?);
            let map = face_map(&p, &q)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for (f, img) in &map.assignment {
                rows.push(json!({"face": face_json(&p, f), "image": face_json(&q, img)}));
                lines.push(format!("  {} -> {}", face_text(&p, f), face_text(&q, img)));
            }
            let ok = map.is_inclusion_preserving();
            lines.push(format!("inclusion-preserving: {ok}"));
            ReportDocument::new(
                Verdict::from_bool(ok),
                json!({"table": rows, "inclusion_preserving": ok}),
                lines,
            )
        }
        Command::EdgeCheck { factor, p, q } => {
            let r = edge_hypothesis(&load(&p)?, &load(&q)?, &factor)?;
            let status = |s: EdgeStatus| match s {
                EdgeStatus::Pass => "pass",
                EdgeStatus::Fail => "fail",
                EdgeStatus::Collapsed => "collapsed",
            };
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for e in &r.pairs {
                let target_len = e.target.as_ref().map(|t| t.length.to_string());
                rows.push(json!({
                    "edge": [point_row(&e.source.start), point_row(&e.source.end)],
                    "length": e.source.length.to_string(),
                    "image": point_rows(&e.image),
                    "image_length": target_len,
                    "status": status(e.status),
                }));
                lines.push(format!(
                    "  {} -- {} (length {}) -> {} : {}",
                    e.source.start,
                    e.source.end,
                    e.source.length,
                    target_len.map_or_else(|| "vertex".to_string(), |l| format!("edge of length {l}")),
                    status(e.status)
                ));
            }
            lines.push(format!("reading: {}", r.reading));
            ReportDocument::new(
                Verdict::from_bool(r.all_pass),
                json!({"factor": r.factor.to_string(), "pairs": rows, "all_pass": r.all_pass, "reading": r.reading}),
                lines,
            )
        }
        Command::VerifyPaper { filter } => {
            let cases: Vec<_> = paperlab::catalog()
                .iter()
                .filter(|c| filter.as_deref().is_none_or(|f| c.name.contains(f)))
                .collect();
            if cases.is_empty() {
                return Err(polynormal_core::Error::UnknownExample(filter.unwrap_or_default()).into());
            }
            let results = cases.iter().map(|c| c.run(budget)).collect::<Result<Vec<_>, _>>()?;
            let ok = results.iter().all(|r| r.passed);
            let rows: Vec<Value> = results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "expected": r.expected, "observed": r.observed}))
                .collect();
            let lines = results.iter().map(|r| r.to_string()).collect();
            ReportDocument::new(Verdict::from_bool(ok), json!({"cases": rows}), lines)
        }
        Command::Harness {
            which,
            trials,
            seed,
            dim,
        } => {
            let r = match which {
                Which::MainB => paperlab::harness_main_b(trials, dim, seed, &PairParams::default(), budget),
                Which::MainLemma => paperlab::harness_main_lemma_random(trials, seed, 6, 3, budget)?,
                Which::Sum => paperlab::harness_sum(trials, 2, seed, budget),
                Which::LemmaA => paperlab::harness_lemma_a(trials, seed, budget),
            };
            trial_report(&r)
        }
        Command::Svg { figure } => {
            let (fig, out) = match figure {
                Figure::Cover { file, c, out } => (svg::cover_figure(&load(&file)?, &c, budget)?, out),
                Figure::Pair { q, p, out } => (svg::pair_figure(&load(&q)?, &load(&p)?, budget)?, out),
                Figure::Fan { file, out } => (svg::fan_figure(&load(&file)?)?, out),
            };
            let text = fig.render();
            std::fs::write(&out, &text).map_err(|source| CliError::Io {
                path: out.clone(),
                source,
            })?;
            let written = out.display().to_string();
            ReportDocument::new(
                Verdict::Info,
                json!({"out": written, "bytes": text.len()}),
                vec![format!("wrote {} bytes to {written}", text.len())],
            )
        }
    })
}

//! Command-line front end: file format, reports, figures and subcommands.

pub mod app;
pub mod doc;
pub mod report;
pub mod svg;

use std::path::PathBuf;

use thiserror::Error;

pub use app::{run, Cli};
pub use doc::{DocError, PolytopeDocument};
pub use report::{ReportDocument, Verdict, SCHEMA};

/// Environment variable overriding the enumeration budget.
pub const BUDGET_ENV: &str = "POLYNORMAL_BUDGET";

/// Exit status for errors; verdicts use 0 and 1.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: String, source: DocError },
    #[error(transparent)]
    Core(#[from] polynormal_core::Error),
    #[error("figures need two-dimensional input, got dimension {0}")]
    NotTwoDimensional(usize),
    #[error("{0}")]
    Usage(String),
}

use thiserror::Error;

/// Errors raised by the polyhedral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("input is not full-dimensional in R^{0}")]
    NotFullDimensional(usize),
    #[error("halfspace system is unbounded")]
    Unbounded,
    #[error("halfspace system is empty")]
    Empty,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("enumeration budget exceeded: {candidates} candidates, cap {cap}")]
    BudgetExceeded { candidates: u128, cap: u64 },
    #[error("polytope is not a lattice polytope")]
    NotLatticePolytope,
    #[error("point {0} is not a vertex")]
    NotAVertex(String),
    #[error("normal fan of the first polytope does not refine the second")]
    NotRefining,
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("generator gave up after {0} attempts")]
    GenerationBudgetExceeded(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be non-increasing")]
    InvalidPartition(Vec<u32>),

    #[error("cell ({row}, {col}) lies outside the diagram of {partition}")]
    CellOutside { partition: Partition, row: usize, col: usize },

    #[error("series did not converge within weight {layers}: value {value}, tail estimate {tail_estimate}")]
    NonConvergence { value: f64, tail_estimate: f64, layers: usize },

    #[error("Pochhammer denominator vanishes at partition {0}")]
    PochhammerPole(Partition),

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("validity condition violated: {0}")]
    ConditionViolated(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("coincident reflection eigenvalues R[{0}] and R[{1}]")]
    CoincidentEigenvalues(usize, usize),

    #[error("Kramers pair mismatch: singular values {0} and {1}")]
    KramersMismatch(f64, f64),

    #[error("matrix is not antisymmetric (deviation {0:e})")]
    NotAntisymmetric(f64),

    #[error("Pfaffian requires an even dimension, got {0}")]
    OddDimension(usize),

    #[error("degenerate skew moment matrix at pair {0} (r = {1:e})")]
    DegenerateSkewSystem(usize, f64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("Monte Carlo budget exhausted: standard error {achieved:e} exceeds request {requested:e}")]
    BudgetExhausted { achieved: f64, requested: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

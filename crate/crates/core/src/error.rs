use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition (bad `k`, empty
    /// replicate list, dimension mismatch, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input data violate a schema or contain non-finite values.
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// An estimation routine failed to produce a usable fit.
    #[error("fit failure: {0}")]
    FitFailure(String),

    /// Simulation cannot produce a comparable dataset at this parameter value
    /// (vanishing acceptance probability, simulated subset too small, ...).
    #[error("simulation infeasible: {0}")]
    Infeasible(String),

    /// A computation collapsed numerically (e.g. every resampling weight
    /// underflowed to zero).
    #[error("numerically degenerate: {0}")]
    Degenerate(String),

    /// Too few observations to carry out the requested step.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Every candidate model was rejected by the permutation test.
    #[error("no plausible model: every candidate was rejected at the given significance level")]
    NoPlausibleModel,

    /// Every grid point failed to fit or simulate.
    #[error("sweep failed: {0}")]
    SweepFailed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

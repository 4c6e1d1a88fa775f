//! Simulation-based sensitivity analysis (SSA) for non-ignorable missing data.
//!
//! The question behind every non-ignorable (MNAR) missing-data problem is the
//! same: the parameter that ties missingness to the unobserved values cannot be
//! estimated from the observed data, so how do we decide which assumptions are
//! defensible? The approach implemented here sweeps a grid of candidate
//! sensitivity parameters, and for each candidate
//!
//! 1. fits the model given that candidate,
//! 2. simulates incomplete replicate datasets from the fitted model,
//! 3. scores the replicates against the real observations with a
//!    k-nearest-neighbour cluster distance, and
//! 4. converts the score into an achieved significance level (ASL) with a
//!    permutation test.
//!
//! Candidates whose ASL exceeds the significance level form the *plausible
//! set*; the plausible candidate with the smallest average distance is the
//! *most plausible* model and its fit the most plausible estimate.
//!
//! The [`engine`] module runs the generic sweep over anything implementing
//! [`engine::SensitivityModel`]. Concrete models live under [`models`]:
//!
//! - [`models::meta`]: random-effects meta-analysis with a probit-style
//!   study-selection model (publication bias),
//! - [`models::mean`]: mean estimation when the response itself drives a
//!   logistic missingness mechanism,
//! - [`models::longitudinal`]: monotone dropout in repeated measures via
//!   exponentially tilted conditionals,
//! - [`models::regression`]: linear regression with one non-ignorably missing
//!   covariate.
//!
//! [`knn`] and [`permute`] hold the distance and the permutation test;
//! [`io`] parses the supported CSV dataset schemas.

pub mod engine;
pub mod error;
pub mod io;
pub mod knn;
pub mod linmod;
pub mod models;
pub mod numeric;
pub mod optim;
pub mod permute;
pub mod rng;

pub use error::{Error, Result};

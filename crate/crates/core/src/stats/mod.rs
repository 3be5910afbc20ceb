//! Simple linear regression with significance testing, and Pearson
//! correlation matrices over descriptor vectors.

mod correlation;
mod regression;
mod special;

use thiserror::Error;

pub use correlation::{correlation_graph, correlation_matrix, pearson, CorrelationGraph, CorrelationMatrix};
pub use regression::{linear_fit, RegressionResult, Sample};
pub use special::{f_upper_tail, inc_beta, ln_gamma};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("regression needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("x values are all identical; slope is undefined")]
    ZeroXVariance,
    #[error("non-finite value at position {0}")]
    NonFinite(usize),
    #[error("vector `{0}` is constant; correlation is undefined")]
    ConstantVector(String),
    #[error("vector `{name}` has length {len}, expected {expected}")]
    LengthMismatch { name: String, len: usize, expected: usize },
}

//! Discriminating power of an index over an isomer family.
//!
//! Sensitivity is `distinct / N`: the share of the family that receives a
//! value no earlier member already had.

use serde::Serialize;
use thiserror::Error;

use crate::alkane::{enumerate_alkanes, AlkaneError};
use crate::indices::{compute_all, IndexError, IndexKind};

/// Relative tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DegeneracyError {
    #[error("tolerance must be non-negative, got {0}")]
    NegativeTolerance(f64),
    #[error("sensitivity of an empty family is undefined")]
    EmptyFamily,
    #[error(transparent)]
    Alkane(#[from] AlkaneError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sensitivity {
    pub family_size: usize,
    pub distinct_values: usize,
    pub sensitivity: f64,
}

/// Counts equivalence classes after sorting, starting a new class whenever
/// two neighbours differ by more than `tolerance·max(1, |a|, |b|)`.
///
/// Chains of near-equal values collapse into one class. That keeps the
/// result deterministic at the price of being order-sensitive for
/// adversarial inputs spaced just under the tolerance.
pub fn sensitivity(values: &[f64], tolerance: f64) -> Result<Sensitivity, DegeneracyError> {
    if tolerance < 0.0 || tolerance.is_nan() {
        return Err(DegeneracyError::NegativeTolerance(tolerance));
    }
    if values.is_empty() {
        return Err(DegeneracyError::EmptyFamily);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let distinct = 1 + sorted
        .windows(2)
        .filter(|w| {
            let (a, b) = (w[0], w[1]);
            (b - a).abs() > tolerance * 1f64.max(a.abs()).max(b.abs())
        })
        .count();
    Ok(Sensitivity {
        family_size: values.len(),
        distinct_values: distinct,
        sensitivity: distinct as f64 / values.len() as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SensitivityReport {
    pub carbons: usize,
    pub index: IndexKind,
    pub family_size: usize,
    pub distinct_values: usize,
    pub sensitivity: f64,
}

/// Sensitivity of each index over the full alkane isomer family of each
/// requested carbon count.
pub fn sensitivity_table(
    carbons: &[usize],
    kinds: &[IndexKind],
    tolerance: f64,
) -> Result<Vec<SensitivityReport>, DegeneracyError> {
    let mut out = Vec::with_capacity(carbons.len() * kinds.len());
    for &n in carbons {
        let family = enumerate_alkanes(n)?;
        let rows = family
            .iter()
            .map(|g| compute_all(g, kinds))
            .collect::<Result<Vec<_>, _>>()?;
        for (col, &index) in kinds.iter().enumerate() {
            let values: Vec<f64> = rows.iter().map(|r| r[col].value).collect();
            let s = sensitivity(&values, tolerance)?;
            out.push(SensitivityReport {
                carbons: n,
                index,
                family_size: s.family_size,
                distinct_values: s.distinct_values,
                sensitivity: s.sensitivity,
            });
        }
    }
    Ok(out)
}

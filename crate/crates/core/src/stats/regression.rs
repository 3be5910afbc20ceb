use serde::Serialize;

use super::{f_upper_tail, StatsError};

/// Paired observations `(x, y)` for a simple linear fit.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl Sample {
    pub fn new(pairs: &[(f64, f64)]) -> Result<Self, StatsError> {
        let (x, y) = pairs.iter().copied().unzip();
        Self::from_columns(x, y)
    }

    pub fn from_columns(x: Vec<f64>, y: Vec<f64>) -> Result<Self, StatsError> {
        assert_eq!(x.len(), y.len(), "x and y columns differ in length");
        if let Some(i) = x.iter().zip(&y).position(|(a, b)| !a.is_finite() || !b.is_finite()) {
            return Err(StatsError::NonFinite(i));
        }
        if x.len() < 3 {
            return Err(StatsError::TooFewPoints(x.len()));
        }
        if x.iter().all(|&v| v == x[0]) {
            return Err(StatsError::ZeroXVariance);
        }
        Ok(Sample { x, y })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }
}

/// Least-squares fit `y = slope·x + intercept` with its summary statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegressionResult {
    pub intercept: f64,
    pub slope: f64,
    pub r: f64,
    /// Residual standard error, `sqrt(SSE / (n - 2))`.
    pub se: f64,
    /// `MSR / MSE` on (1, n - 2) degrees of freedom.
    pub f_stat: f64,
    /// Upper-tail probability of `f_stat`.
    pub sig_f: f64,
    pub n: usize,
}

impl RegressionResult {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

pub fn linear_fit(s: &Sample) -> RegressionResult {
    let n = s.len();
    let nf = n as f64;
    let mean_x = s.x.iter().sum::<f64>() / nf;
    let mean_y = s.y.iter().sum::<f64>() / nf;

    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in s.x.iter().zip(&s.y) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse: f64 = s
        .x
        .iter()
        .zip(&s.y)
        .map(|(&x, &y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    let ssr = slope * slope * sxx;
    let df = (n - 2) as f64;

    let r = if syy == 0.0 {
        0.0
    } else {
        (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
    };
    let mse = sse / df;
    let f_stat = if mse > 0.0 {
        ssr / mse
    } else if ssr > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };

    RegressionResult {
        intercept,
        slope,
        r,
        se: mse.sqrt(),
        f_stat,
        sig_f: f_upper_tail(f_stat, 1, (n - 2) as u32),
        n,
    }
}

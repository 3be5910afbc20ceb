use serde::Serialize;

use super::StatsError;

/// Pearson correlation of two equal-length vectors. Returns NaN when either
/// vector is constant.
pub fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    (sab / (saa * sbb).sqrt()).clamp(-1.0, 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    pub names: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        Some(self.values[i][j])
    }
}

/// Symmetric matrix of pairwise Pearson coefficients with a unit diagonal.
pub fn correlation_matrix(columns: &[(String, Vec<f64>)]) -> Result<CorrelationMatrix, StatsError> {
    let expected = columns.first().map_or(0, |c| c.1.len());
    for (name, v) in columns {
        if v.len() != expected {
            return Err(StatsError::LengthMismatch {
                name: name.clone(),
                len: v.len(),
                expected,
            });
        }
    }
    if expected < 3 {
        return Err(StatsError::TooFewPoints(expected));
    }
    for (name, v) in columns {
        if v.iter().all(|&x| x == v[0]) {
            return Err(StatsError::ConstantVector(name.clone()));
        }
    }

    let k = columns.len();
    let mut values = vec![vec![1.0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let r = pearson(&columns[i].1, &columns[j].1);
            values[i][j] = r;
            values[j][i] = r;
        }
    }
    Ok(CorrelationMatrix {
        names: columns.iter().map(|c| c.0.clone()).collect(),
        values,
    })
}

/// Descriptors as vertices, joined when `|r| >= threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub threshold: f64,
}

impl CorrelationGraph {
    pub fn degree(&self, node: &str) -> Option<usize> {
        let i = self.nodes.iter().position(|n| n == node)?;
        Some(self.edges.iter().filter(|&&(a, b)| a == i || b == i).count())
    }
}

pub fn correlation_graph(m: &CorrelationMatrix, threshold: f64) -> CorrelationGraph {
    let k = m.names.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if m.values[i][j].abs() >= threshold {
                edges.push((i, j));
            }
        }
    }
    CorrelationGraph {
        nodes: m.names.clone(),
        edges,
        threshold,
    }
}

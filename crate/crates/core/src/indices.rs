//! Degree-based and neighborhood-degree-based topological indices.
//!
//! Every index is a sum over edges of a contribution `f(δu, δv, du, dv)`.
//! Integer-valued indices are accumulated exactly in `u128`; only the
//! square-root and ratio based ones touch floating point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{MolGraph, VertexProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index {0} is undefined on a graph without edges")]
    NoEdges(IndexKind),
    #[error("unknown index name `{0}`")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IndexKind {
    /// Σ √(δu·δv)
    ND1,
    /// Σ 1/√(δu+δv)
    ND2,
    /// Σ δu·δv·(δu+δv)
    ND3,
    /// Σ 1/√(δu·δv)
    ND4,
    /// Σ (δu/δv + δv/δu)
    ND5,
    /// Σ (du·δu + dv·δv)
    ND6,
    /// Randić: Σ 1/√(du·dv)
    R,
    /// Reciprocal Randić: Σ √(du·dv)
    RR,
    /// First Zagreb: Σ (du+dv)
    M1,
    /// Second Zagreb: Σ du·dv
    M2,
    /// Forgotten: Σ (du²+dv²)
    F,
    /// Sum-connectivity: Σ 1/√(du+dv)
    SCI,
    /// Symmetric division deg: Σ (du/dv + dv/du)
    SDD,
    /// Third redefined Zagreb: Σ du·dv·(du+dv)
    ReZG3,
    /// Neighborhood second Zagreb: Σ δu·δv
    M2star,
    /// Neighborhood Zagreb: Σ_v δ(v)², edge form Σ (δu·dv + δv·du)
    MN,
    /// Neighborhood hyper Zagreb: Σ (δu+δv)²
    HMN,
    /// Neighborhood forgotten: Σ (δu²+δv²)
    FNstar,
    /// Fifth geometric-arithmetic: Σ 2√(δu·δv)/(δu+δv)
    GA5,
}

impl IndexKind {
    pub const ALL: [IndexKind; 19] = [
        IndexKind::ND1,
        IndexKind::ND2,
        IndexKind::ND3,
        IndexKind::ND4,
        IndexKind::ND5,
        IndexKind::ND6,
        IndexKind::R,
        IndexKind::RR,
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::SCI,
        IndexKind::SDD,
        IndexKind::ReZG3,
        IndexKind::M2star,
        IndexKind::MN,
        IndexKind::HMN,
        IndexKind::FNstar,
        IndexKind::GA5,
    ];

    /// The six neighborhood degree sum indices.
    pub const ND: [IndexKind; 6] = [
        IndexKind::ND1,
        IndexKind::ND2,
        IndexKind::ND3,
        IndexKind::ND4,
        IndexKind::ND5,
        IndexKind::ND6,
    ];

    /// Classic degree-based indices used for comparison.
    pub const CLASSIC: [IndexKind; 7] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::SCI,
        IndexKind::R,
        IndexKind::RR,
        IndexKind::SDD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::ND1 => "ND1",
            IndexKind::ND2 => "ND2",
            IndexKind::ND3 => "ND3",
            IndexKind::ND4 => "ND4",
            IndexKind::ND5 => "ND5",
            IndexKind::ND6 => "ND6",
            IndexKind::R => "R",
            IndexKind::RR => "RR",
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::F => "F",
            IndexKind::SCI => "SCI",
            IndexKind::SDD => "SDD",
            IndexKind::ReZG3 => "ReZG3",
            IndexKind::M2star => "M2star",
            IndexKind::MN => "MN",
            IndexKind::HMN => "HMN",
            IndexKind::FNstar => "FNstar",
            IndexKind::GA5 => "GA5",
        }
    }

    /// Whether the index takes only integer values (and is summed exactly).
    pub fn is_integer(self) -> bool {
        matches!(
            self,
            IndexKind::ND3
                | IndexKind::ND6
                | IndexKind::M1
                | IndexKind::M2
                | IndexKind::F
                | IndexKind::ReZG3
                | IndexKind::M2star
                | IndexKind::MN
                | IndexKind::HMN
                | IndexKind::FNstar
        )
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == lower)
            .ok_or_else(|| IndexError::UnknownName(s.to_string()))
    }
}

/// Parses a comma separated index list; `all`, `nd` and `classic` expand to
/// the corresponding groups.
pub fn parse_index_list(s: &str) -> Result<Vec<IndexKind>, IndexError> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok.to_ascii_lowercase().as_str() {
            "all" => out.extend(IndexKind::ALL),
            "nd" => out.extend(IndexKind::ND),
            "classic" => out.extend(IndexKind::CLASSIC),
            _ => out.push(tok.parse()?),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexValue {
    pub kind: IndexKind,
    pub value: f64,
}

/// Exact value of an integer-valued index, `None` for real-valued kinds.
pub fn exact_integer(g: &MolGraph, kind: IndexKind) -> Result<Option<u128>, IndexError> {
    if g.edge_count() == 0 {
        return Err(IndexError::NoEdges(kind));
    }
    Ok(exact_from_profile(g, &g.profile(), kind))
}

fn exact_from_profile(g: &MolGraph, p: &VertexProfile, kind: IndexKind) -> Option<u128> {
    if !kind.is_integer() {
        return None;
    }
    let term = |u: usize, v: usize| -> u128 {
        let (du, dv) = (p.degree[u] as u128, p.degree[v] as u128);
        let (su, sv) = (p.nbd_degree_sum[u] as u128, p.nbd_degree_sum[v] as u128);
        match kind {
            IndexKind::ND3 => su * sv * (su + sv),
            IndexKind::ND6 => du * su + dv * sv,
            IndexKind::M1 => du + dv,
            IndexKind::M2 => du * dv,
            IndexKind::F => du * du + dv * dv,
            IndexKind::ReZG3 => du * dv * (du + dv),
            IndexKind::M2star => su * sv,
            IndexKind::MN => su * dv + sv * du,
            IndexKind::HMN => (su + sv) * (su + sv),
            IndexKind::FNstar => su * su + sv * sv,
            _ => unreachable!("real-valued index"),
        }
    };
    Some(g.edges().iter().map(|&(u, v)| term(u, v)).sum())
}

fn real_from_profile(g: &MolGraph, p: &VertexProfile, kind: IndexKind) -> f64 {
    let term = |u: usize, v: usize| -> f64 {
        let (du, dv) = (p.degree[u] as f64, p.degree[v] as f64);
        let (su, sv) = (p.nbd_degree_sum[u] as f64, p.nbd_degree_sum[v] as f64);
        match kind {
            IndexKind::ND1 => (su * sv).sqrt(),
            IndexKind::ND2 => 1.0 / (su + sv).sqrt(),
            IndexKind::ND4 => 1.0 / (su * sv).sqrt(),
            IndexKind::ND5 => su / sv + sv / su,
            IndexKind::R => 1.0 / (du * dv).sqrt(),
            IndexKind::RR => (du * dv).sqrt(),
            IndexKind::SCI => 1.0 / (du + dv).sqrt(),
            IndexKind::SDD => du / dv + dv / du,
            IndexKind::GA5 => 2.0 * (su * sv).sqrt() / (su + sv),
            _ => unreachable!("integer index"),
        }
    };
    g.edges().iter().map(|&(u, v)| term(u, v)).sum()
}

fn value_from_profile(g: &MolGraph, p: &VertexProfile, kind: IndexKind) -> f64 {
    match exact_from_profile(g, p, kind) {
        Some(x) => x as f64,
        None => real_from_profile(g, p, kind),
    }
}

pub fn compute_index(g: &MolGraph, kind: IndexKind) -> Result<IndexValue, IndexError> {
    if g.edge_count() == 0 {
        return Err(IndexError::NoEdges(kind));
    }
    let value = value_from_profile(g, &g.profile(), kind);
    Ok(IndexValue { kind, value })
}

/// Computes several indices sharing one vertex profile. Order is preserved.
pub fn compute_all(g: &MolGraph, kinds: &[IndexKind]) -> Result<Vec<IndexValue>, IndexError> {
    if let (0, Some(&k)) = (g.edge_count(), kinds.first()) {
        return Err(IndexError::NoEdges(k));
    }
    let p = g.profile();
    Ok(kinds
        .iter()
        .map(|&kind| IndexValue {
            kind,
            value: value_from_profile(g, &p, kind),
        })
        .collect())
}

/// First Zagreb index in its vertex form, Σ_v d(v)².
pub fn m1_vertex_form(g: &MolGraph) -> u128 {
    g.profile().degree.iter().map(|&d| (d as u128).pow(2)).sum()
}

/// Neighborhood Zagreb index in its vertex form, Σ_v δ(v)².
pub fn mn_vertex_form(g: &MolGraph) -> u128 {
    g.profile()
        .nbd_degree_sum
        .iter()
        .map(|&s| (s as u128).pow(2))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(g: &MolGraph, k: IndexKind) -> f64 {
        compute_index(g, k).unwrap().value
    }

    fn tetramethylbutane() -> MolGraph {
        // Two quaternary carbons, each carrying three methyls.
        MolGraph::new(
            8,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)],
        )
        .unwrap()
    }

    #[test]
    fn octane_path_nd_row() {
        let g = MolGraph::path(8).unwrap();
        let got: Vec<f64> = compute_all(&g, &IndexKind::ND)
            .unwrap()
            .iter()
            .map(|v| v.value)
            .collect();
        let expected = [23.827, 2.711, 612.0, 2.144, 14.5, 92.0];
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < 1e-3, "{got:?}");
        }
    }

    #[test]
    fn small_graph_values() {
        let p2 = MolGraph::path(2).unwrap();
        assert_eq!(value(&p2, IndexKind::ND5), 2.0);
        let got: Vec<f64> = compute_all(&p2, &[IndexKind::ND1, IndexKind::ND3, IndexKind::ND4])
            .unwrap()
            .iter()
            .map(|v| v.value)
            .collect();
        assert_eq!(got, vec![1.0, 2.0, 1.0]);

        let isobutane = MolGraph::star(3).unwrap();
        assert_eq!(value(&isobutane, IndexKind::ND6), 36.0);
        assert_eq!(exact_integer(&tetramethylbutane(), IndexKind::ND3).unwrap(), Some(2534));
        assert_eq!(exact_integer(&tetramethylbutane(), IndexKind::ND6).unwrap(), Some(248));
    }

    #[test]
    fn path_classic_values() {
        let g = MolGraph::path(8).unwrap();
        assert_eq!(value(&g, IndexKind::M1), 26.0);
        assert_eq!(value(&g, IndexKind::M2), 24.0);
        assert_eq!(value(&g, IndexKind::F), 50.0);
        assert_eq!(value(&g, IndexKind::SDD), 15.0);
        assert!((value(&g, IndexKind::R) - 3.914214).abs() < 1e-6);
        assert!((value(&g, IndexKind::RR) - 12.828427).abs() < 1e-6);
        assert!((value(&g, IndexKind::GA5) - 6.939080).abs() < 1e-5);
    }

    #[test]
    fn vertex_and_edge_forms_agree() {
        for g in [MolGraph::path(8).unwrap(), tetramethylbutane(), MolGraph::complete(5).unwrap()] {
            assert_eq!(exact_integer(&g, IndexKind::M1).unwrap(), Some(m1_vertex_form(&g)));
            assert_eq!(exact_integer(&g, IndexKind::MN).unwrap(), Some(mn_vertex_form(&g)));
        }
    }

    #[test]
    fn regular_closed_forms() {
        let g = MolGraph::cycle(7).unwrap();
        let (m, k2) = (7.0, 4.0);
        assert_eq!(value(&g, IndexKind::ND1), m * k2);
        assert_eq!(value(&g, IndexKind::ND4), m / k2);
        assert_eq!(value(&g, IndexKind::ND5), 2.0 * m);
        assert_eq!(value(&g, IndexKind::GA5), m);
    }

    #[test]
    fn names_parse_case_insensitively() {
        for k in IndexKind::ALL {
            assert_eq!(k.name().to_uppercase().parse::<IndexKind>().unwrap(), k);
            assert_eq!(k.name().to_lowercase().parse::<IndexKind>().unwrap(), k);
        }
        assert!(matches!("nd7".parse::<IndexKind>(), Err(IndexError::UnknownName(_))));
        assert_eq!(parse_index_list("nd").unwrap(), IndexKind::ND.to_vec());
        assert_eq!(parse_index_list("all").unwrap().len(), 19);
        assert_eq!(
            parse_index_list("ga5, Rezg3").unwrap(),
            vec![IndexKind::GA5, IndexKind::ReZG3]
        );
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = MolGraph::new(1, &[]).unwrap();
        assert_eq!(
            compute_index(&g, IndexKind::ND1),
            Err(IndexError::NoEdges(IndexKind::ND1))
        );
        assert!(compute_all(&g, &[IndexKind::M2]).is_err());
    }
}

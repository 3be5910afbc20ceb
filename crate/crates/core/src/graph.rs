//! Simple connected molecular graphs and their degree profiles.
//!
//! A [`MolGraph`] is validated once at construction: no self-loops, no
//! duplicate edges, and every vertex reachable from vertex 0. Everything
//! downstream (indices, bounds, enumeration) relies on those guarantees and
//! never re-checks them.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertex {0} is not reachable from vertex 0")]
    Disconnected(usize),
    #[error("neighborhood degree extrema need at least two vertices")]
    TooFewVertices,
    #[error("edge list line {line}: {msg}")]
    EdgeListSyntax { line: usize, msg: String },
}

/// Hydrogen-suppressed molecular graph with dense 0-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl MolGraph {
    /// Validates the edge list and builds adjacency lists.
    ///
    /// Edges keep the order they were given in; index sums iterate in that
    /// order so results are reproducible bit for bit.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }

        let mut visited = vec![false; vertex_count];
        let mut queue = VecDeque::from([0]);
        visited[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = visited.iter().position(|&seen| !seen) {
            return Err(GraphError::Disconnected(v));
        }

        Ok(MolGraph {
            vertex_count,
            edges: edges.to_vec(),
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertex_count
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.vertex_count).all(|v| self.degree(v) == d)
    }

    /// True for K_{a,b}: bipartite with every cross pair joined.
    pub fn is_complete_bipartite(&self) -> bool {
        if self.vertex_count < 2 {
            return false;
        }
        let mut side = vec![usize::MAX; self.vertex_count];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
        let a = side.iter().filter(|&&s| s == 0).count();
        let b = self.vertex_count - a;
        self.edges.len() == a * b
    }

    /// Degree and neighborhood degree sum of every vertex.
    pub fn profile(&self) -> VertexProfile {
        let degree: Vec<u64> = self.adjacency.iter().map(|a| a.len() as u64).collect();
        let nbd_degree_sum = self
            .adjacency
            .iter()
            .map(|a| a.iter().map(|&w| degree[w]).sum())
            .collect();
        VertexProfile {
            degree,
            nbd_degree_sum,
        }
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Blank lines and lines starting with `#` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let syntax = |line: usize, msg: &str| GraphError::EdgeListSyntax {
            line,
            msg: msg.to_string(),
        };
        let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let mut it = l.split_whitespace();
            let a = it.next().and_then(|t| t.parse().ok());
            let b = it.next().and_then(|t| t.parse().ok());
            match (a, b, it.next()) {
                (Some(a), Some(b), None) => Ok((a, b)),
                _ => Err(syntax(line, "expected two non-negative integers")),
            }
        };

        let (hline, header) = rows.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
        let (n, m) = pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in rows {
            edges.push(pair(line, l)?);
        }
        if edges.len() != m {
            return Err(syntax(
                hline,
                &format!("header declares {m} edges but {} were given", edges.len()),
            ));
        }
        MolGraph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Path P_n.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        MolGraph::new(n, &edges)
    }

    /// Cycle C_n, n >= 3.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        MolGraph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        MolGraph::new(n, &edges)
    }

    /// K_{a,b} with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        MolGraph::new(a + b, &edges)
    }

    /// Star K_{1,k} centred on vertex 0.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        MolGraph::complete_bipartite(1, k)
    }
}

impl fmt::Display for MolGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MolGraph(n={}, m={})", self.vertex_count, self.edges.len())
    }
}

/// Per-vertex degree `d(v)` and neighborhood degree sum `δ(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexProfile {
    pub degree: Vec<u64>,
    pub nbd_degree_sum: Vec<u64>,
}

impl VertexProfile {
    pub fn len(&self) -> usize {
        self.degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degree.is_empty()
    }

    /// Smallest and largest neighborhood degree sum.
    pub fn extrema(&self) -> Result<NbdExtrema, GraphError> {
        if self.len() < 2 {
            return Err(GraphError::TooFewVertices);
        }
        let delta_min = *self.nbd_degree_sum.iter().min().unwrap();
        let delta_max = *self.nbd_degree_sum.iter().max().unwrap();
        Ok(NbdExtrema {
            delta_min,
            delta_max,
        })
    }
}

/// `δ_N` and `Δ_N`: the extreme neighborhood degree sums of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NbdExtrema {
    pub delta_min: u64,
    pub delta_max: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_is_smallest_graph() {
        let g = MolGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        let p = g.profile();
        assert_eq!(p.degree, vec![1, 1]);
        assert_eq!(p.nbd_degree_sum, vec![1, 1]);
        let ext = p.extrema().unwrap();
        assert_eq!((ext.delta_min, ext.delta_max), (1, 1));
    }

    #[test]
    fn octane_path_profile() {
        let g = MolGraph::path(8).unwrap();
        assert_eq!(g.edge_count(), 7);
        let p = g.profile();
        assert_eq!(p.nbd_degree_sum, vec![2, 3, 4, 4, 4, 4, 3, 2]);
        let ext = p.extrema().unwrap();
        assert_eq!((ext.delta_min, ext.delta_max), (2, 4));
    }

    #[test]
    fn isobutane_star_profile() {
        let g = MolGraph::star(3).unwrap();
        let p = g.profile();
        assert_eq!(p.degree, vec![3, 1, 1, 1]);
        assert_eq!(p.nbd_degree_sum, vec![3, 3, 3, 3]);
        let ext = p.extrema().unwrap();
        assert_eq!((ext.delta_min, ext.delta_max), (3, 3));
    }

    #[test]
    fn construction_errors_are_distinct() {
        assert_eq!(MolGraph::new(0, &[]), Err(GraphError::Empty));
        assert_eq!(
            MolGraph::new(4, &[(0, 1), (2, 3)]),
            Err(GraphError::Disconnected(2))
        );
        assert_eq!(MolGraph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            MolGraph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            MolGraph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
    }

    #[test]
    fn single_vertex_has_no_extrema() {
        let g = MolGraph::new(1, &[]).unwrap();
        assert_eq!(g.profile().extrema(), Err(GraphError::TooFewVertices));
    }

    #[test]
    fn graph_classes() {
        assert!(MolGraph::cycle(6).unwrap().is_regular());
        assert!(MolGraph::complete_bipartite(2, 3).unwrap().is_complete_bipartite());
        assert!(!MolGraph::path(4).unwrap().is_complete_bipartite());
        assert!(MolGraph::path(3).unwrap().is_complete_bipartite());
        assert!(!MolGraph::complete(3).unwrap().is_complete_bipartite());
        assert!(MolGraph::path(5).unwrap().is_tree());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# n-butane\n4 3\n0 1\n1 2\n\n2 3\n";
        let g = MolGraph::from_edge_list(text).unwrap();
        assert_eq!(g, MolGraph::path(4).unwrap());
        assert_eq!(MolGraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            MolGraph::from_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeListSyntax { line: 1, .. })
        ));
        assert!(matches!(
            MolGraph::from_edge_list("3 2\n0 1\n1 x\n"),
            Err(GraphError::EdgeListSyntax { line: 3, .. })
        ));
        assert!(matches!(
            MolGraph::from_edge_list("4 2\n0 1\n2 3\n"),
            Err(GraphError::Disconnected(_))
        ));
    }
}

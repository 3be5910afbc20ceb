//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's index or enumeration code.

#![allow(dead_code)]

use std::collections::HashMap;

/// Degrees and neighborhood degree sums from a dense adjacency matrix.
pub fn naive_profile(n: usize, edges: &[(usize, usize)]) -> (Vec<f64>, Vec<f64>) {
    let mut adj = vec![vec![0u8; n]; n];
    for &(u, v) in edges {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    let deg: Vec<f64> = adj.iter().map(|row| row.iter().map(|&a| a as f64).sum()).collect();
    let nbd = (0..n)
        .map(|v| (0..n).filter(|&w| adj[v][w] == 1).map(|w| deg[w]).sum())
        .collect();
    (deg, nbd)
}

/// ND1..ND6 straight from their definitions.
pub fn naive_nd(n: usize, edges: &[(usize, usize)]) -> [f64; 6] {
    let (d, s) = naive_profile(n, edges);
    let mut out = [0.0; 6];
    for &(u, v) in edges {
        let (a, b) = (s[u], s[v]);
        out[0] += (a * b).sqrt();
        out[1] += 1.0 / (a + b).sqrt();
        out[2] += a * b * (a + b);
        out[3] += 1.0 / (a * b).sqrt();
        out[4] += a / b + b / a;
        out[5] += d[u] * a + d[v] * b;
    }
    out
}

/// Classic degree indices in the order M1, M2, F, SCI, R, RR, SDD.
pub fn naive_classic(n: usize, edges: &[(usize, usize)]) -> [f64; 7] {
    let (d, _) = naive_profile(n, edges);
    let mut out = [0.0; 7];
    for &(u, v) in edges {
        let (a, b) = (d[u], d[v]);
        out[0] += a + b;
        out[1] += a * b;
        out[2] += a * a + b * b;
        out[3] += 1.0 / (a + b).sqrt();
        out[4] += 1.0 / (a * b).sqrt();
        out[5] += (a * b).sqrt();
        out[6] += a / b + b / a;
    }
    out
}

/// Decodes a Prüfer sequence over labels `0..n` into tree edges, using the
/// linear-time pointer walk.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n - 1);
    prufer_walk(seq, n, |u, v| edges.push((u, v)));
    edges
}

fn prufer_walk(seq: &[usize], n: usize, mut edge: impl FnMut(usize, usize)) {
    let mut degree = [1u8; MAX_N];
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        edge(leaf, v);
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edge(leaf, n - 1);
}

const MAX_N: usize = 16;

/// Fixed-size adjacency for trees with maximum degree 4; no allocation.
struct SmallTree {
    n: usize,
    deg: [u8; MAX_N],
    adj: [[u8; 4]; MAX_N],
}

impl SmallTree {
    fn new(n: usize) -> Self {
        SmallTree { n, deg: [0; MAX_N], adj: [[0; 4]; MAX_N] }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.adj[u][self.deg[u] as usize] = v as u8;
        self.adj[v][self.deg[v] as usize] = u as u8;
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn neighbors(&self, v: usize) -> &[u8] {
        &self.adj[v][..self.deg[v] as usize]
    }

    /// Leaf peeling down to one or two centers.
    fn centers(&self) -> ([usize; 2], usize) {
        if self.n <= 2 {
            return ([0, 1], self.n);
        }
        let mut deg = self.deg;
        let mut layer = [0usize; MAX_N];
        let mut len = 0;
        for v in 0..self.n {
            if deg[v] == 1 {
                layer[len] = v;
                len += 1;
            }
        }
        let mut remaining = self.n;
        while remaining > 2 {
            remaining -= len;
            let mut next = [0usize; MAX_N];
            let mut next_len = 0;
            for &leaf in &layer[..len] {
                for &w in self.neighbors(leaf) {
                    let w = w as usize;
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next[next_len] = w;
                        next_len += 1;
                    }
                }
            }
            layer = next;
            len = next_len;
        }
        ([layer[0], layer[1]], len)
    }

    fn rooted(&self, v: usize, parent: usize) -> Code {
        let mut kids = [(0u32, 0u64); 4];
        let mut k = 0;
        for &w in self.neighbors(v) {
            if w as usize != parent {
                kids[k] = self.rooted(w as usize, v);
                k += 1;
            }
        }
        kids[..k].sort_unstable();
        let mut len = 1;
        let mut bits = 1u64;
        for &(l, b) in &kids[..k] {
            bits = (bits << l) | b;
            len += l;
        }
        (len + 1, bits << 1)
    }

    fn key(&self) -> Code {
        let (c, count) = self.centers();
        c[..count].iter().map(|&r| self.rooted(r, usize::MAX)).min().unwrap()
    }
}

/// Bit-packed AHU code: '(' = 1, ')' = 0, with a length tag. Children are
/// ordered by (length, bits), which is a fixed total order and therefore
/// gives a canonical form.
type Code = (u32, u64);

/// Canonical form of a free tree with maximum degree 4: minimum rooted code
/// over its centers.
pub fn tree_key(n: usize, edges: &[(usize, usize)]) -> Code {
    let mut t = SmallTree::new(n);
    edges.iter().for_each(|&(u, v)| t.add(u, v));
    t.key()
}

/// One representative edge list per isomorphism class of trees on `n`
/// vertices with maximum degree 4, by brute force over all `n^(n-2)`
/// Prüfer sequences.
pub fn prufer_alkanes(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!((2..=MAX_N).contains(&n));
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut count = [0u8; MAX_N];
    count[0] = len as u8;
    let mut classes: HashMap<Code, Vec<usize>> = HashMap::new();
    loop {
        // degree = occurrences + 1
        if count[..n].iter().all(|&c| c <= 3) {
            let mut t = SmallTree::new(n);
            prufer_walk(&seq, n, |u, v| t.add(u, v));
            classes.entry(t.key()).or_insert_with(|| seq.clone());
        }
        // odometer increment, keeping label counts in step
        let mut i = 0;
        while i < len {
            count[seq[i]] -= 1;
            seq[i] += 1;
            if seq[i] < n {
                count[seq[i]] += 1;
                break;
            }
            seq[i] = 0;
            count[0] += 1;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    classes.into_values().map(|s| prufer_edges(&s, n)).collect()
}

/// Relative closeness used when comparing against printed values.
pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// Reads a CSV file under `tests/data` or `data` into string rows
/// (header dropped).
pub fn read_rows(rel: &str) -> Vec<Vec<String>> {
    let path = format!("{}/{}", env!("CARGO_MANIFEST_DIR"), rel);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

/// Number of digits after the decimal point in a printed number.
pub fn printed_decimals(s: &str) -> Option<usize> {
    let mantissa = s.split(['e', 'E']).next().unwrap();
    if s.contains(['e', 'E']) {
        return None;
    }
    Some(mantissa.split_once('.').map_or(0, |(_, f)| f.len()))
}

/// Rounds to `d` decimal places.
pub fn round_to(x: f64, d: usize) -> f64 {
    let p = 10f64.powi(d as i32);
    (x * p).round() / p
}

use std::fmt;

use serde::Serialize;

use super::AlkaneError;
use crate::graph::MolGraph;

/// AHU parenthesis encoding of a free tree rooted at its center.
///
/// Two trees share a code exactly when they are isomorphic. Codes compare
/// lexicographically, which gives enumeration output a stable order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_code(g: &MolGraph) -> Result<CanonicalCode, AlkaneError> {
    if !g.is_tree() {
        return Err(AlkaneError::NotTree {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    let code = centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .expect("a tree has one or two centers");
    Ok(CanonicalCode(code))
}

/// Peels leaves layer by layer until one or two vertices remain.
fn centers(g: &MolGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &MolGraph, root: usize) -> String {
    // Iterative post-order so long chains cannot overflow the stack.
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }

    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = vec![String::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[u]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        kids.iter().for_each(|k| s.push_str(k));
        s.push(')');
        if u == root {
            code[u] = s;
        } else {
            child_codes[parent[u]].push(s);
        }
    }
    std::mem::take(&mut code[root])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alkane::parse_alkane;

    #[test]
    fn relabeling_invariance() {
        let a = MolGraph::path(4).unwrap();
        let b = MolGraph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(
            canonical_code(&a).unwrap(),
            canonical_code(&MolGraph::star(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn small_codes() {
        let code = |g: MolGraph| canonical_code(&g).unwrap().to_string();
        assert_eq!(code(MolGraph::new(1, &[]).unwrap()), "()");
        assert_eq!(code(MolGraph::path(2).unwrap()), "(())");
        assert_eq!(code(MolGraph::path(3).unwrap()), "(()())");
        assert_eq!(code(MolGraph::star(3).unwrap()), "(()()())");
    }

    #[test]
    fn rejects_cycles() {
        assert_eq!(
            canonical_code(&MolGraph::cycle(5).unwrap()),
            Err(AlkaneError::NotTree { vertices: 5, edges: 5 })
        );
    }

    #[test]
    fn distinguishes_octane_isomers() {
        let codes: std::collections::BTreeSet<_> = [
            "CCCCCCCC", "CC(C)CCCCC", "CCC(C)CCCC", "CCCC(C)CCC", "CCC(CC)CCC",
            "CC(C)(C)CCCC", "CC(C)C(C)CCC", "CC(C)CC(C)CC", "CC(C)CCC(C)C",
            "CCC(C)(C)CCC", "CCC(C)C(C)CC", "CCC(C)(CC)CC", "CC(C)C(C)(C)CC",
            "CC(C)C(CC)CC", "CC(C)(C)CC(C)C", "CC(C)C(C)C(C)C", "CC(C)(C)C(C)CC",
            "CC(C)(C)C(C)(C)C",
        ]
        .iter()
        .map(|s| canonical_code(&parse_alkane(s).unwrap()).unwrap())
        .collect();
        assert_eq!(codes.len(), 18);
    }
}

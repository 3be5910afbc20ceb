use std::collections::VecDeque;

use super::AlkaneError;
use crate::graph::MolGraph;

/// Parses a carbon-only SMILES string with branches (`CC(C)C`) into its
/// hydrogen-suppressed skeleton. Vertices are numbered in order of
/// appearance.
pub fn parse_alkane(formula: &str) -> Result<MolGraph, AlkaneError> {
    if formula.is_empty() {
        return Err(AlkaneError::Empty);
    }

    // (vertex, offset of the '(') for every open branch
    let mut branches: Vec<(usize, usize)> = Vec::new();
    let mut atom_offsets: Vec<usize> = Vec::new();
    let mut degree: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut current: Option<usize> = None;
    let mut prev_char = None;

    for (offset, ch) in formula.char_indices() {
        match ch {
            'C' => {
                let v = atom_offsets.len();
                atom_offsets.push(offset);
                degree.push(0);
                if let Some(u) = current {
                    degree[u] += 1;
                    degree[v] += 1;
                    if degree[u] > 4 {
                        return Err(AlkaneError::Valence {
                            atom_offset: atom_offsets[u],
                            offset,
                        });
                    }
                    edges.push((u, v));
                }
                current = Some(v);
            }
            '(' => match (current, prev_char) {
                (Some(u), Some('C' | ')')) => branches.push((u, offset)),
                _ => return Err(AlkaneError::UnexpectedChar { ch, offset }),
            },
            ')' => {
                if prev_char == Some('(') {
                    return Err(AlkaneError::EmptyBranch { offset: offset - 1 });
                }
                let (u, _) = branches
                    .pop()
                    .ok_or(AlkaneError::UnmatchedClose { offset })?;
                current = Some(u);
            }
            _ => return Err(AlkaneError::UnexpectedChar { ch, offset }),
        }
        prev_char = Some(ch);
    }

    if let Some(&(_, offset)) = branches.last() {
        return Err(AlkaneError::UnclosedBranch { offset });
    }
    Ok(MolGraph::new(atom_offsets.len(), &edges).expect("parser emits a connected simple tree"))
}

/// Writes a tree skeleton back out in the dialect accepted by
/// [`parse_alkane`]. The longest chain is written unbranched, so linear
/// alkanes come out as plain `CCC...`, and the output is canonical:
/// isomorphic skeletons always produce the same string.
pub fn write_alkane(g: &MolGraph) -> Result<String, AlkaneError> {
    if !g.is_tree() {
        return Err(AlkaneError::NotTree {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > 4) {
        return Err(AlkaneError::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        });
    }

    // In a tree, ecc(v) = max(d(v, b), d(v, c)) for the two ends b, c of any
    // longest path, so every chain end is found with three searches.
    let b = *bfs_order(g, 0).last().unwrap();
    let from_b = distances(g, b);
    let c = (0..g.vertex_count()).max_by_key(|&v| (from_b[v], v)).unwrap();
    let from_c = distances(g, c);
    let diameter = from_b[c];
    let best = (0..g.vertex_count())
        .filter(|&v| from_b[v].max(from_c[v]) == diameter)
        .map(|v| write_from(g, v))
        .min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)))
        .expect("a tree has a longest path");
    Ok(best)
}

/// Writes the skeleton starting at `start`, always continuing the main
/// chain into the tallest child. Children are ordered by height, then by
/// subtree shape, so the result depends only on the rooted tree.
fn write_from(g: &MolGraph, start: usize) -> String {
    let order = bfs_order(g, start);
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[start] = start;
    for &u in &order {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
            }
        }
    }
    let parent = &parent;
    let children = |u: usize| g.neighbors(u).iter().copied().filter(move |&w| w != parent[u]);

    // Subtree heights and shape codes, leaves first.
    let mut height = vec![0usize; n];
    let mut shape = vec![String::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<&str> = children(u).map(|w| shape[w].as_str()).collect();
        kids.sort_unstable();
        let code = format!("({})", kids.concat());
        height[u] = children(u).map(|w| height[w] + 1).max().unwrap_or(0);
        shape[u] = code;
    }

    let mut out = String::with_capacity(3 * n);
    // Explicit stack of pending writes keeps deep chains off the call stack.
    enum Step {
        Atom(usize),
        Open,
        Close,
    }
    let mut stack = vec![Step::Atom(start)];
    while let Some(step) = stack.pop() {
        match step {
            Step::Close => out.push(')'),
            Step::Open => out.push('('),
            Step::Atom(u) => {
                out.push('C');
                let mut kids: Vec<usize> = children(u).collect();
                kids.sort_by(|&x, &y| height[x].cmp(&height[y]).then_with(|| shape[x].cmp(&shape[y])));
                if let Some((&main, side)) = kids.split_last() {
                    // Pushed in reverse so side branches are written first.
                    stack.push(Step::Atom(main));
                    for &w in side.iter().rev() {
                        stack.push(Step::Close);
                        stack.push(Step::Atom(w));
                        stack.push(Step::Open);
                    }
                }
            }
        }
    }
    out
}

fn distances(g: &MolGraph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[root] = 0;
    for u in bfs_order(g, root) {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
            }
        }
    }
    dist
}

fn bfs_order(g: &MolGraph, root: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

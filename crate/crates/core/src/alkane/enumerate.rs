use super::{canonical_code, AlkaneError};
use crate::graph::MolGraph;

/// Largest carbon count accepted by [`enumerate_alkanes`].
pub const MAX_CARBONS: usize = 16;

/// A rooted tree in canonical parenthesis form.
#[derive(Debug, Clone)]
struct Rooted {
    size: usize,
    code: String,
}

/// One representative skeleton per constitutional isomer of CnH2n+2,
/// sorted by canonical code.
///
/// Every free tree is built exactly once from its centroid: either a single
/// root whose branches all have fewer than n/2 vertices, or (for even n) an
/// edge joining two rooted halves of exactly n/2 vertices.
pub fn enumerate_alkanes(n: usize) -> Result<Vec<MolGraph>, AlkaneError> {
    if !(1..=MAX_CARBONS).contains(&n) {
        return Err(AlkaneError::CountOutOfRange(n));
    }

    // Non-root vertices already spend one bond on their parent.
    let branches = rooted_trees(n / 2, 3);
    let mut out = Vec::new();

    for kids in multisets(&branches, n - 1, (n - 1) / 2, 4) {
        out.push(decode(&wrap(&kids), None));
    }
    if n.is_multiple_of(2) {
        let halves: Vec<&Rooted> = branches.iter().filter(|r| r.size == n / 2).collect();
        for (i, a) in halves.iter().enumerate() {
            for b in &halves[i..] {
                let mut edges = Vec::with_capacity(n - 1);
                let mut count = 0;
                decode_into(&a.code, None, &mut edges, &mut count);
                decode_into(&b.code, Some(0), &mut edges, &mut count);
                out.push(MolGraph::new(count, &edges).expect("halves form a tree"));
            }
        }
    }

    let mut keyed: Vec<_> = out
        .into_iter()
        .map(|g| (canonical_code(&g).expect("enumerated graphs are trees"), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(keyed.windows(2).all(|w| w[0].0 != w[1].0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// All rooted trees with at most `max_size` vertices whose every vertex has
/// at most `max_children` children, ordered by (size, code).
fn rooted_trees(max_size: usize, max_children: usize) -> Vec<Rooted> {
    let mut all: Vec<Rooted> = Vec::new();
    for size in 1..=max_size {
        let mut layer: Vec<Rooted> = multisets(&all, size - 1, size - 1, max_children)
            .into_iter()
            .map(|kids| Rooted {
                size,
                code: wrap(&kids),
            })
            .collect();
        layer.sort_by(|a, b| a.code.cmp(&b.code));
        all.extend(layer);
    }
    all
}

/// Multisets of at most `max_count` items from `pool`, each of size at most
/// `max_item`, whose sizes sum to `total`. Items are chosen with
/// non-decreasing pool index so each multiset appears once.
fn multisets(
    pool: &[Rooted],
    total: usize,
    max_item: usize,
    max_count: usize,
) -> Vec<Vec<&Rooted>> {
    fn go<'a>(
        pool: &'a [Rooted],
        from: usize,
        left: usize,
        max_item: usize,
        slots: usize,
        cur: &mut Vec<&'a Rooted>,
        out: &mut Vec<Vec<&'a Rooted>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for (i, item) in pool.iter().enumerate().skip(from) {
            if item.size > max_item || item.size > left {
                continue;
            }
            cur.push(item);
            go(pool, i, left - item.size, max_item, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, 0, total, max_item, max_count, &mut Vec::new(), &mut out);
    out
}

fn wrap(kids: &[&Rooted]) -> String {
    let mut codes: Vec<&str> = kids.iter().map(|k| k.code.as_str()).collect();
    codes.sort_unstable();
    format!("({})", codes.concat())
}

fn decode(code: &str, parent: Option<usize>) -> MolGraph {
    let mut edges = Vec::new();
    let mut count = 0;
    decode_into(code, parent, &mut edges, &mut count);
    MolGraph::new(count, &edges).expect("parenthesis code describes a tree")
}

/// Appends the tree described by `code` to an edge list, attaching its root
/// to `parent` when given.
fn decode_into(
    code: &str,
    parent: Option<usize>,
    edges: &mut Vec<(usize, usize)>,
    count: &mut usize,
) {
    let mut stack: Vec<usize> = parent.into_iter().collect();
    for ch in code.bytes() {
        if ch == b'(' {
            let v = *count;
            *count += 1;
            if let Some(&p) = stack.last() {
                edges.push((p, v));
            }
            stack.push(v);
        } else {
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomer_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_alkanes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 9, 18, 35, 75]);
    }

    #[test]
    fn larger_counts() {
        assert_eq!(enumerate_alkanes(12).unwrap().len(), 355);
        assert_eq!(enumerate_alkanes(MAX_CARBONS).unwrap().len(), 10359);
    }

    #[test]
    fn outputs_are_alkane_trees_in_code_order() {
        let graphs = enumerate_alkanes(9).unwrap();
        let codes: Vec<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        for g in &graphs {
            assert!(g.is_tree());
            assert!(g.max_degree() <= 4);
        }
    }

    #[test]
    fn butane_isomers() {
        let graphs = enumerate_alkanes(4).unwrap();
        let mut codes: Vec<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        codes.sort();
        let mut expected = vec![
            canonical_code(&MolGraph::path(4).unwrap()).unwrap(),
            canonical_code(&MolGraph::star(3).unwrap()).unwrap(),
        ];
        expected.sort();
        assert_eq!(codes, expected);
    }

    #[test]
    fn range_is_enforced() {
        assert_eq!(enumerate_alkanes(0), Err(AlkaneError::CountOutOfRange(0)));
        assert_eq!(enumerate_alkanes(17), Err(AlkaneError::CountOutOfRange(17)));
    }
}

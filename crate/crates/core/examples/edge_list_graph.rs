//! Indices and bound checks for an arbitrary connected graph given as an
//! edge list (first line `n m`, then one `u v` pair per line).
//!
//! cargo run --example edge_list_graph -- graph.txt

use ndtopo::bounds::check_all;
use ndtopo::{compute_all, IndexKind, MolGraph};

// Petersen graph
const SAMPLE: &str = "10 15
0 1
1 2
2 3
3 4
4 0
0 5
1 6
2 7
3 8
4 9
5 7
7 9
9 6
6 8
8 5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let g = MolGraph::from_edge_list(&text)?;
    println!("{} vertices, {} edges, regular: {}", g.vertex_count(), g.edge_count(), g.is_regular());
    for v in compute_all(&g, &IndexKind::ND)? {
        println!("  {} = {}", v.kind, v.value);
    }
    for c in check_all(&g)? {
        let mark = if c.passed() { "ok" } else { "VIOLATED" };
        let eq = if c.is_tight() { " (equality)" } else { "" };
        println!("  {mark:<8} {}: {} {} {}{eq}", c.name, c.lhs, c.relation, c.rhs);
    }
    Ok(())
}

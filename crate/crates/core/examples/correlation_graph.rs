//! Correlations between indices over all decane isomers, and the graph
//! joining pairs with |r| at or above a threshold.
//!
//! cargo run --example correlation_graph -- 0.95

use ndtopo::stats::{correlation_graph, correlation_matrix};
use ndtopo::{compute_all, enumerate_alkanes, IndexKind};

fn main() -> Result<(), ndtopo::Error> {
    let threshold: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.95);
    let isomers = enumerate_alkanes(10)?;
    let mut kinds = IndexKind::ND.to_vec();
    kinds.extend(IndexKind::CLASSIC);

    let rows = isomers
        .iter()
        .map(|g| compute_all(g, &kinds))
        .collect::<Result<Vec<_>, _>>()?;
    let columns: Vec<(String, Vec<f64>)> = kinds
        .iter()
        .enumerate()
        .map(|(c, k)| (k.name().to_string(), rows.iter().map(|r| r[c].value).collect()))
        .collect();
    let matrix = correlation_matrix(&columns)?;

    print!("{:>5}", "");
    matrix.names.iter().for_each(|n| print!("{n:>7}"));
    println!();
    for (name, row) in matrix.names.iter().zip(&matrix.values) {
        print!("{name:>5}");
        row.iter().for_each(|v| print!("{v:>7.3}"));
        println!();
    }

    let graph = correlation_graph(&matrix, threshold);
    println!("\n{} edges at |r| >= {threshold}", graph.edges.len());
    for node in &graph.nodes {
        println!("  {node}: degree {}", graph.degree(node).unwrap_or(0));
    }
    Ok(())
}

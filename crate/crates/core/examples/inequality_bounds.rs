//! Checks every inequality on the graphs where equality should hold and on
//! a random sample, reporting the tightest gaps.

use ndtopo::bounds::{check_all, equality_case_graphs, random_graph_suite};

fn main() -> Result<(), ndtopo::Error> {
    for (name, g) in equality_case_graphs() {
        let checks = check_all(&g)?;
        let tight: Vec<&str> = checks
            .iter()
            .filter(|c| c.equality_expected)
            .map(|c| c.name.as_str())
            .collect();
        println!("{name}: {} checks, equality in {}", checks.len(), tight.join(" "));
    }

    let suite = random_graph_suite(500, 10, 1)?;
    let failed = suite.iter().filter(|e| !e.check.passed()).count();
    println!("\nrandom suite: {} checks, {failed} failed", suite.len());

    let closest = suite
        .iter()
        .filter(|e| !e.check.equality_expected)
        .min_by(|a, b| a.check.gap.abs().total_cmp(&b.check.gap.abs()));
    if let Some(e) = closest {
        println!(
            "closest call without expected equality: {} on {} (gap {:e})",
            e.check.name, e.graph, e.check.gap
        );
    }
    Ok(())
}

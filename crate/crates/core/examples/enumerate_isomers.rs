//! Lists alkane isomers by carbon count, with canonical SMILES and codes.
//!
//! cargo run --example enumerate_isomers -- 7

use ndtopo::{canonical_code, enumerate_alkanes, write_alkane};

fn main() -> Result<(), ndtopo::Error> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let isomers = enumerate_alkanes(n)?;
    println!("{} isomers with {n} carbons", isomers.len());
    for g in &isomers {
        println!("  {:<20} {}", write_alkane(g)?, canonical_code(g)?);
    }

    println!("\ncounts:");
    for k in 1..=ndtopo::alkane::MAX_CARBONS.min(14) {
        println!("  C{k:<3} {}", enumerate_alkanes(k)?.len());
    }
    Ok(())
}

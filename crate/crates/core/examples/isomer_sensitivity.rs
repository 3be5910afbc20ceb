//! How well each index separates structural isomers, for families of
//! 6 to 12 carbons.

use ndtopo::degeneracy::DEFAULT_TOLERANCE;
use ndtopo::{sensitivity_table, IndexKind};

fn main() -> Result<(), ndtopo::Error> {
    let carbons: Vec<usize> = (6..=12).collect();
    let mut kinds = IndexKind::ND.to_vec();
    kinds.extend([IndexKind::M1, IndexKind::M2, IndexKind::F, IndexKind::R]);
    let reports = sensitivity_table(&carbons, &kinds, DEFAULT_TOLERANCE)?;

    print!("{:>6}", "index");
    carbons.iter().for_each(|n| print!("{:>8}", format!("C{n}")));
    println!();
    for kind in &kinds {
        print!("{:>6}", kind.name());
        for &n in &carbons {
            let r = reports.iter().find(|r| r.carbons == n && r.index == *kind).unwrap();
            print!("{:>8.3}", r.sensitivity);
        }
        println!();
    }
    Ok(())
}

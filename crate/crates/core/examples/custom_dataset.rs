//! Loads a user dataset from CSV, computes indices and fits a property.
//!
//! cargo run --example custom_dataset -- path/to/compounds.csv bp

use ndtopo::dataset::{index_table, parse_csv, regress};
use ndtopo::{load_csv, IndexKind};

const SAMPLE: &str = r#"name,smiles,bp
butane,CCCC,-0.5
"2-methyl propane",CC(C)C,-11.7
pentane,CCCCC,36.1
"2-methyl butane",CC(C)CC,27.8
"2,2-dimethyl propane",CC(C)(C)C,9.5
hexane,CCCCCC,68.7
"2-methyl pentane",CC(C)CCC,60.3
"#;

fn main() -> Result<(), ndtopo::Error> {
    let mut args = std::env::args().skip(1);
    let dataset = match args.next() {
        Some(path) => load_csv(path)?,
        None => parse_csv(SAMPLE, "sample")?,
    };
    let property = dataset.column(&args.next().unwrap_or_else(|| "bp".to_string()))?;

    let table = index_table(&dataset, &IndexKind::ND)?;
    print!("{}", table.to_csv(4)?);

    println!("\nfits of {}:", property.name());
    for kind in IndexKind::ND {
        let fit = regress(&dataset, kind, &property)?;
        println!("  {kind}: r = {:.4}, n = {}", fit.r, fit.n);
    }
    Ok(())
}

//! Every supported index for a few carbon skeletons.
//!
//! cargo run --example compute_indices -- "CC(C)(C)C(C)(C)C"

use ndtopo::indices::IndexKind;
use ndtopo::{compute_all, parse_alkane};

fn main() -> Result<(), ndtopo::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let formulas = if args.is_empty() {
        vec!["CCCCCCCC".to_string(), "CC(C)C".to_string(), "CC(C)(C)C(C)(C)C".to_string()]
    } else {
        args
    };
    for formula in &formulas {
        let g = parse_alkane(formula)?;
        println!("{formula} ({} carbons)", g.vertex_count());
        for v in compute_all(&g, &IndexKind::ALL)? {
            println!("  {:<7} {}", v.kind.name(), ndtopo::format::format_sig(v.value, 6));
        }
    }
    Ok(())
}

//! Recomputed regressions on the alkane set next to the published ones,
//! with the curation notes that explain known disagreements.

use ndtopo::dataset::{published_regressions, regress};
use ndtopo::format::format_sig;
use ndtopo::load_builtin;

fn main() -> Result<(), ndtopo::Error> {
    let alkanes = load_builtin("alkanes")?;
    println!("index,property,n,r,r_published,se,se_published,f,f_published");
    for p in published_regressions()?.iter().filter(|p| p.dataset == "alkanes") {
        let prop = alkanes.column(&p.property)?;
        let fit = regress(&alkanes, p.index, &prop)?;
        println!(
            "{},{},{},{},{},{},{},{},{}",
            p.index,
            p.property,
            fit.n,
            format_sig(fit.r, 4),
            p.r,
            format_sig(fit.se, 5),
            p.se,
            format_sig(fit.f_stat, 5),
            p.f
        );
    }
    println!();
    for note in &alkanes.provenance_notes {
        let name = &alkanes.records[note.record].name;
        println!("note [{name}] {}: {}", note.field, note.note);
    }
    Ok(())
}

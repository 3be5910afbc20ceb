//! Regresses every octane property on every ND index and ranks the fits.

use ndtopo::dataset::regress;
use ndtopo::format::format_sig;
use ndtopo::{load_builtin, IndexKind};

fn main() -> Result<(), ndtopo::Error> {
    let octane = load_builtin("octane")?;
    for prop in &octane.columns {
        let mut fits = Vec::new();
        for kind in IndexKind::ND {
            fits.push((kind, regress(&octane, kind, prop)?));
        }
        fits.sort_by(|a, b| b.1.r.abs().total_cmp(&a.1.r.abs()));
        println!("{} ({})", prop.name(), prop.description());
        for (kind, fit) in fits {
            println!(
                "  {kind}: y = {} + {}x  r = {}  s = {}  F = {}  sig F = {}",
                format_sig(fit.intercept, 6),
                format_sig(fit.slope, 6),
                format_sig(fit.r, 4),
                format_sig(fit.se, 4),
                format_sig(fit.f_stat, 5),
                format_sig(fit.sig_f, 4),
            );
        }
    }
    Ok(())
}

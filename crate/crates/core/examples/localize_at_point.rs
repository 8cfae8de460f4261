//! Localization at a point with nonzero coordinates, and the exact check
//! that the emitted coordinate change rectifies the foliation.
//!
//! ```bash
//! cargo run -p monofol --example localize_at_point
//! ```

use monofol::rat::{format_rat, rat};
use monofol::symbolic::check_rectification;
use monofol::{IndexSet, Presentation, RationalPoint, Subspace};

fn main() -> monofol::Result<()> {
    let v = Subspace::span(2, &[vec![rat(1), rat(1)]])?;
    let p = Presentation::new(2, IndexSet::from([0, 1]), v)?;
    let point = RationalPoint(vec![rat(1), rat(0)]);
    let loc = p.localize(&point)?;

    let q = &loc.presentation;
    println!("divisor at p: {:?}", q.divisor().iter().map(|i| i + 1).collect::<Vec<_>>());
    for g in q.generators() {
        println!("generator at p: {g}");
    }
    if let Some(change) = &loc.change {
        for (i, s) in &change.shifts {
            println!("z{} = x{} - {}", i + 1, i + 1, format_rat(s));
        }
        for (k, exps) in &change.multipliers {
            let factors: Vec<String> =
                exps.iter().map(|(i, e)| format!("x{}^({})", i + 1, format_rat(e))).collect();
            println!("z{} = x{} * {}", k + 1, k + 1, factors.join(" * "));
        }
    }
    let check = check_rectification(&loc, &point);
    println!("rectification: ok = {} ({})", check.ok, check.detail);
    Ok(())
}

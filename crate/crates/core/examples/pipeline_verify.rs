//! Chains blow-ups and localizations and verifies every presentation
//! produced along the way.
//!
//! ```bash
//! cargo run -p monofol --example pipeline_verify
//! ```

use monofol::rat::{ratio, rat};
use monofol::symbolic::{replay_last_chart, verify_presentation};
use monofol::{atlas, Center, IndexSet, Presentation, RationalPoint, Subspace};

fn main() -> monofol::Result<()> {
    let v = Subspace::span(3, &[vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(1), ratio(1, 2)]])?;
    let start = Presentation::new(3, IndexSet::from([0, 2]), v)?;

    let mut stage = vec![start];
    for step in 0..3 {
        let mut next = Vec::new();
        for p in &stage {
            if step % 2 == 0 {
                next.extend(atlas(p, &Center::from_one_based(3, &[1, 2])?)?.into_iter().map(|(_, q)| q));
            } else {
                next.push(p.localize(&RationalPoint(vec![rat(0), rat(3), rat(0)]))?.presentation);
            }
        }
        stage = next;
    }

    for p in &stage {
        let report = verify_presentation(p);
        let replay = replay_last_chart(p).map_or("n/a".to_string(), |c| c.ok.to_string());
        println!("{:<70} ok = {} chart replay = {replay}", p.history().join(" ; "), report.ok());
        for g in p.generators() {
            println!("    {g}");
        }
    }
    Ok(())
}

//! Blow-up charts: closed-form transforms next to the symbolic strict
//! transform of each generator.
//!
//! ```bash
//! cargo run -p monofol --example blowup_atlas
//! ```

use monofol::rat::rat;
use monofol::symbolic::{monomial_field, pullback_chart, saturate_exceptional};
use monofol::{atlas, Center, IndexSet, Presentation, PresentationJson, Subspace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = Subspace::span(3, &[vec![rat(1), rat(-1), rat(0)]])?;
    let p = Presentation::new(3, IndexSet::from([0, 1]), v)?;
    let center = Center::from_one_based(3, &[1, 2])?;

    for chart in center.charts() {
        println!("{}", chart.label());
        for a in p.subspace().basis().iter_rows() {
            let pulled = pullback_chart(&monomial_field(a), &chart);
            let (strict, k) = saturate_exceptional(&pulled, chart.j());
            let closed = monomial_field(&chart.vector_transform(a)?);
            println!("  pullback {pulled}  ->  strict {strict} (k = {k}); closed form {closed}");
        }
    }

    let charts = atlas(&p, &center)?;
    // Blow up again inside the first chart.
    let nested = atlas(&charts[0].1, &Center::from_one_based(3, &[2, 3])?)?;
    println!("{}", serde_json::to_string_pretty(&PresentationJson::from(&nested[0].1))?);
    Ok(())
}

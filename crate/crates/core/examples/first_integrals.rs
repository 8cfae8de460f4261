//! Monomial first integrals: `x^m` is annihilated by every generator
//! exactly when `m ∈ V⊥`.
//!
//! ```bash
//! cargo run -p monofol --example first_integrals
//! ```

use monofol::rat::rat;
use monofol::symbolic::{integer_exponent, LaurentPoly};
use monofol::{IndexSet, Presentation, Rat, Subspace};
use num_traits::One;

fn main() -> monofol::Result<()> {
    let v = Subspace::span(3, &[vec![rat(1), rat(-1), rat(0)]])?;
    let p = Presentation::new(3, IndexSet::from([0, 1]), v)?;
    let generators = p.generators();
    for g in &generators {
        println!("generator: {g}");
    }

    let perp = p.subspace().perp();
    println!("V⊥ has dimension {}", perp.dim());
    for m in perp.basis().iter_rows() {
        let f = LaurentPoly::monomial(integer_exponent(m), Rat::one());
        let images: Vec<String> = generators.iter().map(|g| g.apply(&f).to_string()).collect();
        println!("  first integral {f}: generator images {images:?}");
    }

    // Outside V⊥ each generator scales the monomial by the pairing.
    let f = LaurentPoly::monomial(vec![2, 1, 0], Rat::one());
    println!("not an integral: ({}) applied to {f} = {}", generators[0], generators[0].apply(&f));
    Ok(())
}

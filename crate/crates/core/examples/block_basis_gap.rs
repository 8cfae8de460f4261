//! The partition-adapted block basis, including a subspace for which the
//! unit-pivot construction cannot stay inside `V`.
//!
//! ```bash
//! cargo run -p monofol --example block_basis_gap
//! ```

use monofol::rat::{format_rat, rat};
use monofol::{IndexSet, Rat, Subspace};

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

fn report(v: &Subspace, i1: IndexSet, i2: IndexSet) -> monofol::Result<()> {
    let b = v.block_basis(&i1, &i2)?;
    println!("I1 = {:?}, I2 = {:?}", i1.iter().map(|i| i + 1).collect::<Vec<_>>(), i2.iter().map(|i| i + 1).collect::<Vec<_>>());
    for r in &b.first_kind {
        println!("  first kind, pivot {}: row {} A {} B {}", r.pivot + 1, show(&r.row), show(&r.a_part), show(&r.b_part));
    }
    for r in &b.second_kind {
        println!("  second kind, pivot {}: row {}", r.pivot + 1, show(&r.row));
    }
    for t in b.truncated_basis() {
        println!("  e_pivot + B: {} in V: {}", show(&t), v.contains(&t));
    }
    println!("  gap: {}", b.gap);
    Ok(())
}

fn main() -> monofol::Result<()> {
    let clean = Subspace::span(3, &[vec![rat(1), rat(0), rat(2)], vec![rat(0), rat(1), rat(3)]])?;
    report(&clean, IndexSet::from([0]), IndexSet::from([1, 2]))?;

    let diagonal = Subspace::span(2, &[vec![rat(1), rat(1)]])?;
    report(&diagonal, IndexSet::from([0, 1]), IndexSet::new())?;
    Ok(())
}

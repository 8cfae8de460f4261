//! Row reduction, pivot priorities, kernels and membership over ℚ.
//!
//! ```bash
//! cargo run -p monofol --example exact_linear_algebra
//! ```

use monofol::rat::{format_rat, rat};
use monofol::{kernel_basis, member, rref, rref_with_column_priority, Mat, Rat};

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let m = Mat::from_rows(3, &[vec![rat(0), rat(1), rat(3)], vec![rat(1), rat(0), rat(2)]]);
    let e = rref(&m);
    println!("rref of {m:?}");
    for r in e.reduced.iter_rows() {
        println!("  {}", show(r));
    }
    println!("  pivots (1-based): {:?}", e.pivots.iter().map(|p| p + 1).collect::<Vec<_>>());

    // Prefer column 3, then 1, then 2.
    let e = rref_with_column_priority(&e.reduced, &[2, 0, 1]);
    println!("same rows with column priority (3,1,2):");
    for r in e.reduced.iter_rows() {
        println!("  {}", show(r));
    }
    println!("  pivots (1-based): {:?}", e.pivots.iter().map(|p| p + 1).collect::<Vec<_>>());

    let row = Mat::from_rows(3, &[vec![rat(1), rat(1), rat(0)]]);
    println!("kernel of [1 1 0]:");
    for k in kernel_basis(&row) {
        println!("  {}", show(&k));
    }

    let basis = Mat::from_rows(3, &[vec![rat(1), rat(-1), rat(0)]]);
    match member(&basis, &[rat(2), rat(-2), rat(0)]) {
        Some(c) => println!("(2,-2,0) = {} · (1,-1,0)", show(&c)),
        None => println!("(2,-2,0) is not in the span"),
    }
}

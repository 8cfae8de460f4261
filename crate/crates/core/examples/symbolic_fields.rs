//! Laurent-coefficient vector fields: application, brackets, chart
//! pullback, saturation and logarithmic tangency.
//!
//! ```bash
//! cargo run -p monofol --example symbolic_fields
//! ```

use monofol::rat::rat;
use monofol::symbolic::{
    bracket, is_log_tangent, monomial_field, pullback_chart, saturate_exceptional, LaurentPoly,
    VectorField,
};
use monofol::{Center, Chart, IndexSet};

fn main() -> monofol::Result<()> {
    let euler = monomial_field(&[rat(1), rat(-1)]);
    let x1x2 = LaurentPoly::monomial(vec![1, 1], rat(1));
    println!("({euler})({x1x2}) = {}", euler.apply(&x1x2));

    let d1 = VectorField::coordinate(2, 0);
    let x1d1 = monomial_field(&[rat(1), rat(0)]);
    println!("[{d1}, {x1d1}] = {}", bracket(&d1, &x1d1));

    let chart = Chart::new(Center::from_one_based(2, &[1, 2])?, 0)?;
    let d2 = VectorField::coordinate(2, 1);
    let pulled = pullback_chart(&d2, &chart);
    let (saturated, k) = saturate_exceptional(&pulled, 0);
    println!("{d2} in {}: {pulled}; saturated by y1^{k}: {saturated}", chart.label());

    let x2d1 = VectorField::new(vec![LaurentPoly::monomial(vec![0, 1], rat(1)), LaurentPoly::zero(2)]);
    println!("{x2d1} tangent to x1 = 0: {}", is_log_tangent(&x2d1, &IndexSet::from([0])));
    println!("machine form: {}", serde_json::to_string(&x1d1.terms()).unwrap());
    Ok(())
}

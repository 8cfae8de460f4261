//! Symbolic vector fields with Laurent coefficients.
//!
//! Everything here is computed by formal differentiation and substitution,
//! independently of the closed-form transforms in [`crate::blowup`] and
//! [`crate::presentation`], so it can be used to check them.

mod field;
mod laurent;
mod verify;

pub use field::{
    apply, bracket, chart_inverse, chart_substitution, is_log_tangent, monomial_field,
    pullback_chart, pullback_function, saturate_exceptional, FieldTerm, VectorField,
};
pub use laurent::{Exponent, LaurentPoly};
pub use verify::{
    check_chart_step, check_first_integrals, check_rectification, in_module, integer_exponent,
    replay_last_chart, strict_transform, verify_fields, verify_presentation, Check, Report,
};

//! Exact computations with locally monomial foliations.
//!
//! A foliation is described near a point of a chart by a *presentation*
//! `(x, I, V)`: coordinates, the indices `I` of the normal crossing divisor
//! `{xᵢ = 0 : i ∈ I}`, and a rational subspace `V ⊆ ℚⁿ` whose monomial
//! fields `Σ aᵢ xᵢ∂ᵢ` generate the foliation. This crate provides
//!
//! * [`linalg`]: exact row reduction, kernels and membership over ℚ;
//! * [`subspace`]: canonical subspaces, complements, and the block basis
//!   adapted to a coordinate partition;
//! * [`presentation`]: rank, free directions, generators and localization;
//! * [`blowup`]: chart transforms of blow-ups along coordinate centers;
//! * [`symbolic`]: Laurent-coefficient vector fields used as an independent
//!   oracle for all of the above;
//! * [`cli`]: the JSON batch front-end behind the `monofol` binary.
//!
//! Indices are 0-based in the API and 1-based in files and command output.

pub mod blowup;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod presentation;
pub mod rat;
pub mod subspace;
pub mod symbolic;

pub use blowup::{atlas, center_normal_crossing_check, Center, Chart};
pub use error::{Error, Result};
pub use linalg::{kernel_basis, member, rref, rref_with_column_priority, Echelon, Mat};
pub use presentation::{
    validate_json, Localization, MonomialChange, Presentation, PresentationJson, RationalPoint,
};
pub use rat::{parse_rat, Rat};
pub use subspace::{BlockBasis, IndexSet, Subspace};

//! Local presentations `(x, I, V)` of a locally monomial foliation.
//!
//! The foliation near the chosen point is generated by the monomial fields
//! `Σ aᵢ xᵢ∂ᵢ` for `a ∈ V`, together with `∂ᵢ` for every coordinate `i`
//! off the divisor with `eᵢ ∈ V`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{format_rat, serde_rat, unit_vector, Rat};
use crate::subspace::{BlockBasis, IndexSet, Subspace};
use crate::symbolic::{monomial_field, VectorField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    n: usize,
    divisor: IndexSet,
    subspace: Subspace,
    history: Vec<String>,
}

impl Presentation {
    /// `divisor` holds 0-based indices.
    pub fn new(n: usize, divisor: IndexSet, subspace: Subspace) -> Result<Self> {
        Self::with_history(n, divisor, subspace, Vec::new())
    }

    pub fn with_history(
        n: usize,
        divisor: IndexSet,
        subspace: Subspace,
        history: Vec<String>,
    ) -> Result<Self> {
        if let Some(&i) = divisor.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i + 1, n });
        }
        if subspace.ambient() != n {
            return Err(Error::LengthMismatch { expected: n, found: subspace.ambient() });
        }
        Ok(Presentation { n, divisor, subspace, history })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn divisor(&self) -> &IndexSet {
        &self.divisor
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn history(&self) -> &[String] {
        &self.history
    }

    /// The rank `s = dim V`.
    pub fn rank(&self) -> usize {
        self.subspace.dim()
    }

    /// Structural invariants; empty when the presentation is well formed.
    pub fn validate(&self) -> Vec<Error> {
        validate_json(&PresentationJson::from(self))
    }

    /// `{i ∉ I : eᵢ ∈ V}`.
    pub fn free_directions(&self) -> IndexSet {
        (0..self.n)
            .filter(|i| !self.divisor.contains(i) && self.subspace.contains_unit(*i))
            .collect()
    }

    /// Monomial fields of the canonical basis of `V`, then `∂ᵢ` for each
    /// free direction.
    pub fn generators(&self) -> Vec<VectorField> {
        let monomial = self.subspace.basis().iter_rows().map(monomial_field);
        let free = self.free_directions().into_iter().map(|i| VectorField::coordinate(self.n, i));
        monomial.chain(free).collect()
    }

    /// Re-presents the foliation at a point `p` of the chart.
    ///
    /// With `I₁` the nonzero coordinates of `p` and `I₂` the zero ones, the
    /// new subspace is `(V ∩ ℚ^{I₂}) ⊕ span{e_i : i a first-kind pivot}` and
    /// the new divisor is `I ∩ I₂`. The explicit coordinate change is only
    /// produced when the block basis has no gap.
    pub fn localize(&self, point: &RationalPoint) -> Result<Localization> {
        if point.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: point.len() });
        }
        let i1: IndexSet = (0..self.n).filter(|&i| !point.0[i].is_zero()).collect();
        let i2: IndexSet = (0..self.n).filter(|&i| point.0[i].is_zero()).collect();
        let block = self.subspace.block_basis(&i1, &i2)?;

        let change = (!block.gap).then(|| MonomialChange::from_block(&block, point));
        if i1.is_empty() {
            return Ok(Localization { presentation: self.clone(), change, block });
        }

        let mut vectors = self.subspace.intersect_coordinate(&i2).basis_vectors();
        vectors.extend(block.first_kind.iter().map(|r| unit_vector(self.n, r.pivot)));
        let subspace = Subspace::span(self.n, &vectors)?;
        let divisor = self.divisor.intersection(&i2).copied().collect();
        let mut history = self.history.clone();
        history.push(point.label());
        let presentation = Presentation::with_history(self.n, divisor, subspace, history)?;
        Ok(Localization { presentation, change, block })
    }
}

/// A rational point of the chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint(pub Vec<Rat>);

impl RationalPoint {
    pub fn origin(n: usize) -> Self {
        RationalPoint(vec![Rat::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// History entry, e.g. `localize(p=(1,0))`.
    pub fn label(&self) -> String {
        let coords: Vec<String> = self.0.iter().map(format_rat).collect();
        format!("localize(p=({}))", coords.join(","))
    }
}

/// Coordinates `z` at a point in which the clean part of the foliation is
/// rectified:
///
/// * `zᵢ = xᵢ − pᵢ` for every `i ∈ I₁` (the `shifts`);
/// * `z_k = x_k · Π_{i∈I₁} xᵢ^{μ_{k,i}}` for every `k ∈ I₂` (the
///   `multipliers`), where `μ_{k,i} = −b_k` for the first-kind row with
///   pivot `i` and `0` at non-pivot `I₁` coordinates.
///
/// In these coordinates each first-kind generator becomes `(zᵢ + pᵢ)∂_{zᵢ}`
/// and each second-kind generator keeps its monomial form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialChange {
    pub shifts: BTreeMap<usize, Rat>,
    pub multipliers: BTreeMap<usize, BTreeMap<usize, Rat>>,
}

impl MonomialChange {
    fn from_block(block: &BlockBasis, point: &RationalPoint) -> Self {
        let shifts = block.i1.iter().map(|&i| (i, point.0[i].clone())).collect();
        let multipliers = block
            .i2
            .iter()
            .map(|&k| {
                let exps = block
                    .i1
                    .iter()
                    .map(|&i| {
                        let mu = block
                            .first_kind
                            .iter()
                            .find(|r| r.pivot == i)
                            .map_or_else(Rat::zero, |r| -r.b_part[k].clone());
                        (i, mu)
                    })
                    .collect();
                (k, exps)
            })
            .collect();
        MonomialChange { shifts, multipliers }
    }
}

/// Result of [`Presentation::localize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub presentation: Presentation,
    pub change: Option<MonomialChange>,
    pub block: BlockBasis,
}

/// File form of a presentation. Indices are 1-based, rationals are
/// `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub n: usize,
    pub divisor: Vec<usize>,
    #[serde(with = "serde_rat::matrix")]
    pub basis: Vec<Vec<Rat>>,
    #[serde(default)]
    pub history: Vec<String>,
}

impl From<&Presentation> for PresentationJson {
    fn from(p: &Presentation) -> Self {
        PresentationJson {
            n: p.n,
            divisor: p.divisor.iter().map(|i| i + 1).collect(),
            basis: p.subspace.basis_vectors(),
            history: p.history.clone(),
        }
    }
}

impl TryFrom<&PresentationJson> for Presentation {
    type Error = Error;

    /// Lenient conversion: any spanning set of rows is accepted and
    /// canonicalized. Use [`validate_json`] for the strict check.
    fn try_from(j: &PresentationJson) -> Result<Self> {
        let divisor = one_based_set(j.n, &j.divisor)?;
        let subspace = Subspace::span(j.n, &j.basis)?;
        Presentation::with_history(j.n, divisor, subspace, j.history.clone())
    }
}

fn one_based_set(n: usize, indices: &[usize]) -> Result<IndexSet> {
    indices
        .iter()
        .map(|&i| if i == 0 || i > n { Err(Error::IndexOutOfRange { index: i, n }) } else { Ok(i - 1) })
        .collect()
}

/// Strict structural check of a presentation file: every violation found.
pub fn validate_json(j: &PresentationJson) -> Vec<Error> {
    let mut violations: Vec<Error> = j
        .divisor
        .iter()
        .filter(|&&i| i == 0 || i > j.n)
        .map(|&i| Error::IndexOutOfRange { index: i, n: j.n })
        .collect();
    let bad_rows: Vec<Error> = j
        .basis
        .iter()
        .filter(|r| r.len() != j.n)
        .map(|r| Error::LengthMismatch { expected: j.n, found: r.len() })
        .collect();
    if bad_rows.is_empty() {
        if let Err(e) = Subspace::from_canonical(j.n, &j.basis) {
            violations.push(e);
        }
    }
    violations.extend(bad_rows);
    violations
}

//! Rational subspaces of `ℚⁿ` in canonical form, orthogonal complements,
//! coordinate intersections, and the partition-adapted block basis used by
//! localization.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, member, rref, rref_with_column_priority, Mat};
use crate::rat::{is_zero_vec, serde_rat, unit_vector, Rat};

/// Set of 0-based coordinate indices.
pub type IndexSet = BTreeSet<usize>;

/// A subspace of `ℚⁿ`, stored as the nonzero rows of its reduced row echelon
/// form. Two subspaces are equal exactly when these bases agree entry-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Mat::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Mat::identity(ambient) }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::LengthMismatch { expected: ambient, found: v.len() });
        }
        Ok(Self::row_space(&Mat::from_rows(ambient, vectors)))
    }

    /// Row space of a matrix.
    pub fn row_space(rows: &Mat) -> Self {
        Subspace { basis: rref(rows).basis() }
    }

    /// Accepts `rows` only if they already are a canonical basis.
    pub fn from_canonical(ambient: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        let s = Self::span(ambient, rows)?;
        if s.basis.rows() != rows.len() || s.basis.row_vecs() != rows {
            return Err(Error::NonCanonicalBasis);
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    /// `V⊥ = {m : ⟨a, m⟩ = 0 for all a ∈ V}`.
    pub fn perp(&self) -> Subspace {
        let kernel = kernel_basis(&self.basis);
        Self::row_space(&Mat::from_rows(self.ambient(), &kernel))
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient() && member(&self.basis, v).is_some()
    }

    pub fn contains_unit(&self, i: usize) -> bool {
        self.contains(&unit_vector(self.ambient(), i))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter_rows().all(|r| other.contains(r))
    }

    /// Image under a linear map given on vectors.
    pub fn map(&self, f: impl Fn(&[Rat]) -> Vec<Rat>) -> Result<Subspace> {
        let images: Vec<Vec<Rat>> = self.basis.iter_rows().map(f).collect();
        Subspace::span(self.ambient(), &images)
    }

    /// `V ∩ ℚ^{I₂}`: vectors of `V` vanishing outside `support`.
    ///
    /// Solves `c · B` restricted to the columns off `support` equal to zero,
    /// then maps the solutions back through the basis `B`.
    pub fn intersect_coordinate(&self, support: &IndexSet) -> Subspace {
        let off: Vec<usize> = (0..self.ambient()).filter(|i| !support.contains(i)).collect();
        let restricted = self.basis.select_columns(&off);
        let coefficients = kernel_basis(&restricted.transpose());
        let vectors: Vec<Vec<Rat>> = coefficients.iter().map(|c| self.basis.left_mul(c)).collect();
        Self::row_space(&Mat::from_rows(self.ambient(), &vectors))
    }

    /// Basis adapted to the partition `{0..n} = i1 ⊔ i2`, obtained by row
    /// reduction that prefers `i1` columns (ascending) over `i2` columns
    /// (ascending).
    pub fn block_basis(&self, i1: &IndexSet, i2: &IndexSet) -> Result<BlockBasis> {
        let n = self.ambient();
        if let Some(&i) = i1.iter().chain(i2).find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i + 1, n });
        }
        if !i1.is_disjoint(i2) || i1.len() + i2.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: i1.len() + i2.len() });
        }
        let priority: Vec<usize> = i1.iter().chain(i2).copied().collect();
        let ech = rref_with_column_priority(&self.basis, &priority);
        let pivots: IndexSet = ech.pivots.iter().copied().collect();

        let mut first_kind = Vec::new();
        let mut second_kind = Vec::new();
        for (r, &pivot) in ech.pivots.iter().enumerate() {
            let row = ech.reduced.row(r).to_vec();
            let part = |keep: &dyn Fn(usize) -> bool| -> Vec<Rat> {
                row.iter()
                    .enumerate()
                    .map(|(c, x)| if keep(c) { x.clone() } else { Rat::zero() })
                    .collect()
            };
            if i1.contains(&pivot) {
                let a_part = part(&|c| i1.contains(&c) && !pivots.contains(&c));
                let b_part = part(&|c| i2.contains(&c) && !pivots.contains(&c));
                first_kind.push(FirstKindRow { pivot, row, a_part, b_part });
            } else {
                let c_part = part(&|c| i2.contains(&c) && !pivots.contains(&c));
                second_kind.push(SecondKindRow { pivot, row, c_part });
            }
        }
        let gap = first_kind.iter().any(|r| !is_zero_vec(&r.a_part));
        Ok(BlockBasis { ambient: n, i1: i1.clone(), i2: i2.clone(), first_kind, second_kind, gap })
    }
}

/// A row of the block basis whose pivot lies in `I₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstKindRow {
    pub pivot: usize,
    pub row: Vec<Rat>,
    /// Entries on the non-pivot `I₁` columns.
    pub a_part: Vec<Rat>,
    /// Entries on the non-pivot `I₂` columns.
    pub b_part: Vec<Rat>,
}

/// A row supported in `I₂`, with pivot in `I₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondKindRow {
    pub pivot: usize,
    pub row: Vec<Rat>,
    pub c_part: Vec<Rat>,
}

/// Normal form `[Id A | 0 B ; 0 0 | Id C]` of a subspace relative to a
/// partition `(I₁, I₂)`, up to column order.
///
/// `gap` is set when some first-kind row couples its pivot to another `I₁`
/// coordinate (nonzero A block). In that case the vectors `e_pivot + B`
/// returned by [`BlockBasis::truncated_basis`] leave the subspace: the
/// coupled directions cannot all be split off as unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockBasis {
    pub ambient: usize,
    pub i1: IndexSet,
    pub i2: IndexSet,
    pub first_kind: Vec<FirstKindRow>,
    pub second_kind: Vec<SecondKindRow>,
    pub gap: bool,
}

impl BlockBasis {
    pub fn k1(&self) -> usize {
        self.first_kind.len()
    }

    pub fn k2(&self) -> usize {
        self.second_kind.len()
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.first_kind
            .iter()
            .map(|r| r.row.clone())
            .chain(self.second_kind.iter().map(|r| r.row.clone()))
            .collect()
    }

    pub fn first_kind_pivots(&self) -> IndexSet {
        self.first_kind.iter().map(|r| r.pivot).collect()
    }

    /// `e_pivot + B` for each first-kind row (the A block dropped), followed
    /// by the second-kind rows unchanged. These all lie in the subspace
    /// exactly when `gap` is false.
    pub fn truncated_basis(&self) -> Vec<Vec<Rat>> {
        let firsts = self.first_kind.iter().map(|r| {
            let mut v = r.b_part.clone();
            v[r.pivot] = Rat::one();
            v
        });
        firsts.chain(self.second_kind.iter().map(|r| r.row.clone())).collect()
    }

    /// Span of the second-kind rows.
    pub fn second_kind_span(&self) -> Subspace {
        let rows: Vec<Vec<Rat>> = self.second_kind.iter().map(|r| r.row.clone()).collect();
        Subspace::row_space(&Mat::from_rows(self.ambient, &rows))
    }
}

/// Serialized subspace: `{"ambient": n, "basis": [["p/q", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    #[serde(with = "serde_rat::matrix")]
    pub basis: Vec<Vec<Rat>>,
}

impl From<&Subspace> for SubspaceJson {
    fn from(s: &Subspace) -> Self {
        SubspaceJson { ambient: s.ambient(), basis: s.basis_vectors() }
    }
}

impl TryFrom<SubspaceJson> for Subspace {
    type Error = Error;
    fn try_from(j: SubspaceJson) -> Result<Self> {
        Subspace::from_canonical(j.ambient, &j.basis)
    }
}

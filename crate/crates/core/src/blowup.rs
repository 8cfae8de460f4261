//! Blow-ups along coordinate centers.
//!
//! In chart `j` of the blow-up along `C = {x_i = 0 : i ∈ C}` the
//! substitution is `x_j = y_j`, `x_i = y_i·y_j` for `i ∈ C∖{j}`, and
//! `x_i = y_i` elsewhere. Coordinates keep their original indices.
//!
//! A monomial field `Σ aᵢ xᵢ∂ᵢ` pulls back to a monomial field again, and a
//! monomial `x^m` pulls back to a monomial; both transforms are linear and
//! unimodular, and they are adjoint to each other:
//! `⟨vector_transform(a), exponent_transform(m)⟩ = ⟨a, m⟩`.

use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::rat::Rat;
use crate::subspace::IndexSet;

/// A coordinate center of codimension `r ≥ 2` in an `n`-dimensional chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Center {
    n: usize,
    indices: IndexSet,
}

impl Center {
    /// `indices` are 0-based.
    pub fn new(n: usize, indices: IndexSet) -> Result<Self> {
        if let Some(&i) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidCenter(format!(
                "index {} out of range for ambient dimension {n}",
                i + 1
            )));
        }
        if indices.len() < 2 {
            return Err(Error::InvalidCenter(format!(
                "center must have codimension at least 2, got {}",
                indices.len()
            )));
        }
        Ok(Center { n, indices })
    }

    /// Convenience constructor from 1-based indices.
    pub fn from_one_based(n: usize, indices: &[usize]) -> Result<Self> {
        let mut set = IndexSet::new();
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::InvalidCenter(format!(
                    "index {i} out of range for ambient dimension {n}"
                )));
            }
            set.insert(i - 1);
        }
        Center::new(n, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &IndexSet {
        &self.indices
    }

    pub fn r(&self) -> usize {
        self.indices.len()
    }

    pub fn charts(&self) -> impl Iterator<Item = Chart> + '_ {
        self.indices.iter().map(|&j| Chart { center: self.clone(), j })
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", list.join(","))
    }
}

/// Chart `j` of the blow-up along a center.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    center: Center,
    j: usize,
}

impl Chart {
    /// `j` is 0-based and must belong to the center.
    pub fn new(center: Center, j: usize) -> Result<Self> {
        if !center.indices.contains(&j) {
            return Err(Error::InvalidCenter(format!(
                "chart index {} is not in center {center}",
                j + 1
            )));
        }
        Ok(Chart { center, j })
    }

    pub fn center(&self) -> &Center {
        &self.center
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// History entry, e.g. `blowup(C={1,2}; chart=1)`.
    pub fn label(&self) -> String {
        format!("blowup(C={}; chart={})", self.center, self.j + 1)
    }

    /// Inverse of [`Chart::label`].
    pub fn from_label(n: usize, label: &str) -> Option<Chart> {
        let body = label.strip_prefix("blowup(C={")?.strip_suffix(')')?;
        let (indices, chart) = body.split_once("}; chart=")?;
        let indices: Vec<usize> =
            indices.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
        let j: usize = chart.trim().parse().ok()?;
        let center = Center::from_one_based(n, &indices).ok()?;
        Chart::new(center, j.checked_sub(1)?).ok()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.center.n {
            return Err(Error::LengthMismatch { expected: self.center.n, found: len });
        }
        Ok(())
    }

    /// Transform of the coefficient vector of a monomial field:
    /// `ãᵢ = aᵢ − a_j` for `i ∈ C∖{j}`, all other entries unchanged.
    pub fn vector_transform(&self, a: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(a.len())?;
        let aj = a[self.j].clone();
        Ok(a.iter()
            .enumerate()
            .map(|(i, x)| if i != self.j && self.center.indices.contains(&i) { x - &aj } else { x.clone() })
            .collect())
    }

    /// Inverse of [`Chart::vector_transform`].
    pub fn inverse_vector_transform(&self, a: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(a.len())?;
        let aj = a[self.j].clone();
        Ok(a.iter()
            .enumerate()
            .map(|(i, x)| if i != self.j && self.center.indices.contains(&i) { x + &aj } else { x.clone() })
            .collect())
    }

    /// Exponent of the pullback of `x^m`: `m̃_j = Σ_{i∈C} mᵢ`, the rest unchanged.
    pub fn exponent_transform(&self, m: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(m.len())?;
        let total: Rat = self.center.indices.iter().map(|&i| &m[i]).sum();
        let mut out = m.to_vec();
        out[self.j] = total;
        Ok(out)
    }

    /// The presentation in this chart: divisor gains the exceptional
    /// coordinate `j`, the subspace is mapped by [`Chart::vector_transform`].
    pub fn presentation(&self, p: &Presentation) -> Result<Presentation> {
        if p.n() != self.center.n {
            return Err(Error::InvalidCenter(format!(
                "center lives in dimension {}, presentation in {}",
                self.center.n,
                p.n()
            )));
        }
        let subspace = p.subspace().map(|a| self.vector_transform(a).expect("length checked"))?;
        let mut divisor = p.divisor().clone();
        divisor.insert(self.j);
        let mut history = p.history().to_vec();
        history.push(self.label());
        Presentation::with_history(p.n(), divisor, subspace, history)
    }
}

/// One chart presentation per `j ∈ C`, in ascending `j`.
pub fn atlas(p: &Presentation, center: &Center) -> Result<Vec<(usize, Presentation)>> {
    center.charts().map(|chart| Ok((chart.j(), chart.presentation(p)?))).collect()
}

/// What a coordinate center looks like relative to a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub center: Center,
    /// `C ∩ I`: divisor hyperplanes that contain the center.
    pub divisor_components: IndexSet,
}

/// A coordinate center has normal crossings with the presentation by
/// construction; this validates it and reports `C ∩ I`.
pub fn center_normal_crossing_check(p: &Presentation, indices: &[usize]) -> Result<CenterReport> {
    let center = Center::from_one_based(p.n(), indices)?;
    let divisor_components = center.indices.intersection(p.divisor()).copied().collect();
    Ok(CenterReport { center, divisor_components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::subspace::Subspace;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn chart(n: usize, c: &[usize], j: usize) -> Chart {
        Chart::new(Center::from_one_based(n, c).unwrap(), j - 1).unwrap()
    }

    fn running_example() -> Presentation {
        let s = Subspace::span(3, &[v(&[1, -1, 0])]).unwrap();
        Presentation::new(3, [0, 1].into(), s).unwrap()
    }

    #[test]
    fn vector_transform_examples() {
        let c = chart(3, &[1, 2], 1);
        assert_eq!(c.vector_transform(&v(&[1, -1, 0])).unwrap(), v(&[1, -2, 0]));
        assert_eq!(chart(3, &[1, 2, 3], 2).vector_transform(&v(&[0, 1, 0])).unwrap(), v(&[-1, 1, -1]));
        assert_eq!(c.vector_transform(&v(&[0, 0, 7])).unwrap(), v(&[0, 0, 7]));
        assert!(c.vector_transform(&v(&[1, 2])).is_err());
    }

    #[test]
    fn exponent_transform_examples() {
        let c = chart(3, &[1, 2], 1);
        assert_eq!(c.exponent_transform(&v(&[1, 1, 0])).unwrap(), v(&[2, 1, 0]));
        assert_eq!(c.exponent_transform(&v(&[0, 0, 0])).unwrap(), v(&[0, 0, 0]));
        assert_eq!(c.exponent_transform(&v(&[0, 0, 4])).unwrap(), v(&[0, 0, 4]));
    }

    #[test]
    fn inverse_round_trips() {
        let c = chart(4, &[1, 3, 4], 3);
        let a = v(&[2, -5, 7, 1]);
        assert_eq!(c.inverse_vector_transform(&c.vector_transform(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn chart_presentations() {
        let p = running_example();
        let q = chart(3, &[1, 2], 1).presentation(&p).unwrap();
        assert_eq!(q.divisor(), &IndexSet::from([0, 1]));
        assert_eq!(q.subspace(), &Subspace::span(3, &[v(&[1, -2, 0])]).unwrap());
        assert_eq!(q.history(), &["blowup(C={1,2}; chart=1)".to_string()]);

        let zero = Presentation::new(3, IndexSet::new(), Subspace::zero(3)).unwrap();
        let q = chart(3, &[2, 3], 3).presentation(&zero).unwrap();
        assert_eq!(q.divisor(), &IndexSet::from([2]));
        assert_eq!(q.subspace().dim(), 0);

        let line = Presentation::new(2, IndexSet::new(), Subspace::span(2, &[v(&[1, 0])]).unwrap()).unwrap();
        let q = chart(2, &[1, 2], 2).presentation(&line).unwrap();
        assert_eq!(q.divisor(), &IndexSet::from([1]));
        assert_eq!(q.subspace(), &Subspace::span(2, &[v(&[1, 0])]).unwrap());
    }

    #[test]
    fn atlas_of_running_example() {
        let p = running_example();
        let charts = atlas(&p, &Center::from_one_based(3, &[1, 2]).unwrap()).unwrap();
        assert_eq!(charts.len(), 2);
        assert_eq!(charts[0].0, 0);
        assert_eq!(charts[0].1.subspace(), &Subspace::span(3, &[v(&[1, -2, 0])]).unwrap());
        assert_eq!(charts[1].0, 1);
        assert_eq!(charts[1].1.subspace(), &Subspace::span(3, &[v(&[2, -1, 0])]).unwrap());

        let nested = atlas(&charts[0].1, &Center::from_one_based(3, &[2, 3]).unwrap()).unwrap();
        assert!(nested.iter().all(|(_, q)| q.history().len() == 2));
    }

    #[test]
    fn center_checks() {
        let p = running_example();
        let report = center_normal_crossing_check(&p, &[1, 2]).unwrap();
        assert_eq!(report.divisor_components, IndexSet::from([0, 1]));
        assert!(matches!(center_normal_crossing_check(&p, &[1]), Err(Error::InvalidCenter(_))));
        assert!(matches!(center_normal_crossing_check(&p, &[1, 4]), Err(Error::InvalidCenter(_))));
        assert!(matches!(Chart::new(Center::from_one_based(3, &[1, 2]).unwrap(), 2), Err(Error::InvalidCenter(_))));
    }

    #[test]
    fn label_round_trip() {
        let c = chart(5, &[1, 3, 5], 3);
        assert_eq!(c.label(), "blowup(C={1,3,5}; chart=3)");
        assert_eq!(Chart::from_label(5, &c.label()), Some(c));
        assert_eq!(Chart::from_label(5, "localize(p=(1,0))"), None);
    }
}

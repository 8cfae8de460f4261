use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blowup::Chart;
use crate::rat::{format_rat, Rat};
use crate::subspace::IndexSet;

use super::laurent::{write_term, LaurentPoly};

/// A vector field `Σ Wᵢ ∂ᵢ` with Laurent coefficients, acting as a derivation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    components: Vec<LaurentPoly>,
}

impl VectorField {
    pub fn new(components: Vec<LaurentPoly>) -> Self {
        let n = components.len();
        assert!(components.iter().all(|c| c.nvars() == n), "coefficients must live in n variables");
        VectorField { components }
    }

    pub fn zero(n: usize) -> Self {
        VectorField { components: vec![LaurentPoly::zero(n); n] }
    }

    /// `∂ᵢ`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.components[i] = LaurentPoly::one(n);
        w
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[LaurentPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &LaurentPoly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LaurentPoly::is_zero)
    }

    /// `W(f) = Σ Wᵢ · ∂f/∂xᵢ`.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        assert_eq!(f.nvars(), self.n());
        self.components
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .fold(LaurentPoly::zero(self.n()), |acc, (i, w)| &acc + &(w * &f.derivative(i)))
    }

    pub fn mul_poly(&self, f: &LaurentPoly) -> Self {
        VectorField { components: self.components.iter().map(|c| c * f).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        VectorField { components: self.components.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        VectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        VectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() }
    }

    /// Multiplies every coefficient by `x_i^k`.
    pub fn shift(&self, i: usize, k: i64) -> Self {
        VectorField { components: self.components.iter().map(|c| c.shift(i, k)).collect() }
    }

    /// Machine form: one entry per term, components 1-based.
    pub fn terms(&self) -> Vec<FieldTerm> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| {
                c.terms().map(move |(e, x)| FieldTerm {
                    coeff: format_rat(x),
                    exponents: e.clone(),
                    component: i + 1,
                })
            })
            .collect()
    }
}

/// One term `coeff · x^exponents ∂_component` of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldTerm {
    pub coeff: String,
    pub exponents: Vec<i64>,
    pub component: usize,
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.components.iter().enumerate() {
            let d = format!("d{}", i + 1);
            for (e, x) in c.terms() {
                write_term(f, first, e, x, Some(&d))?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

/// `Σ aᵢ xᵢ ∂ᵢ`.
pub fn monomial_field(a: &[Rat]) -> VectorField {
    let n = a.len();
    VectorField {
        components: a.iter().enumerate().map(|(i, ai)| LaurentPoly::var(n, i).scale(ai)).collect(),
    }
}

pub fn apply(w: &VectorField, f: &LaurentPoly) -> LaurentPoly {
    w.apply(f)
}

/// `[W1, W2]ᵢ = W1(W2ᵢ) − W2(W1ᵢ)`.
pub fn bracket(w1: &VectorField, w2: &VectorField) -> VectorField {
    assert_eq!(w1.n(), w2.n());
    VectorField {
        components: w1
            .components
            .iter()
            .zip(&w2.components)
            .map(|(a, b)| &w1.apply(b) - &w2.apply(a))
            .collect(),
    }
}

/// Chart substitution `x = Φ(y)`: `x_j ↦ y_j`, `x_i ↦ y_i y_j` on the rest
/// of the center, identity elsewhere.
pub fn chart_substitution(chart: &Chart) -> Vec<LaurentPoly> {
    let n = chart.center().n();
    let j = chart.j();
    (0..n)
        .map(|i| {
            let y = LaurentPoly::var(n, i);
            if i != j && chart.center().indices().contains(&i) {
                &y * &LaurentPoly::var(n, j)
            } else {
                y
            }
        })
        .collect()
}

/// Inverse substitution `y = Φ⁻¹(x)`: `y_i = x_i / x_j` on the center.
pub fn chart_inverse(chart: &Chart) -> Vec<LaurentPoly> {
    let n = chart.center().n();
    let j = chart.j();
    (0..n)
        .map(|i| {
            let x = LaurentPoly::var(n, i);
            if i != j && chart.center().indices().contains(&i) {
                x.shift(j, -1)
            } else {
                x
            }
        })
        .collect()
}

/// The field `W̃` on the chart with `W̃(g) = W(g ∘ Φ⁻¹) ∘ Φ`.
///
/// Component `l` is `W(yₗ(x))` rewritten in the chart coordinates.
pub fn pullback_chart(w: &VectorField, chart: &Chart) -> VectorField {
    assert_eq!(w.n(), chart.center().n());
    let forward = chart_substitution(chart);
    let components = chart_inverse(chart)
        .iter()
        .map(|y| {
            w.apply(y)
                .substitute(&forward)
                .expect("chart substitution images are monomials")
        })
        .collect();
    VectorField { components }
}

/// Pullback of a function through the chart, `f ∘ Φ`.
pub fn pullback_function(f: &LaurentPoly, chart: &Chart) -> LaurentPoly {
    f.substitute(&chart_substitution(chart)).expect("chart substitution images are monomials")
}

/// Clears the exceptional coordinate `y_j` from `W`, measured in the
/// logarithmic frame (`y_j ∂_j` and `∂ᵢ` for `i ≠ j`): returns `y_j^k · W`
/// where `k` is the unique integer making the smallest `y_j`-exponent of
/// the logarithmic coefficients zero.
///
/// The zero field is returned unchanged with `k = 0`.
pub fn saturate_exceptional(w: &VectorField, j: usize) -> (VectorField, i64) {
    let min = w
        .components
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.min_exponent(j).map(|e| if i == j { e - 1 } else { e }))
        .min();
    match min {
        None => (w.clone(), 0),
        Some(m) => {
            let k = -m;
            (w.shift(j, k), k)
        }
    }
}

/// Whether `W` is tangent to every hyperplane `{xᵢ = 0}`, `i ∈ divisor`:
/// each such coefficient `Wᵢ` is divisible by `xᵢ`.
pub fn is_log_tangent(w: &VectorField, divisor: &IndexSet) -> bool {
    divisor
        .iter()
        .all(|&i| w.components[i].terms().all(|(e, _)| e[i] >= 1))
}

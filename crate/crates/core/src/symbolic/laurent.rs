use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Exponent vector of a Laurent monomial; entries may be negative.
pub type Exponent = Vec<i64>;

fn add_exponents(a: &[i64], b: &[i64]) -> Exponent {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

/// Sparse Laurent polynomial in `nvars` variables over ℚ.
///
/// Terms are kept in a map ordered lexicographically by exponent; no zero
/// coefficient is ever stored, so equality is plain map equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exponent: Exponent, coeff: Rat) -> Self {
        let nvars = exponent.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[i64]) -> Rat {
        self.terms.get(exponent).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exponent: Exponent, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `x_i^k`.
    pub fn shift(&self, i: usize, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] = e[i].checked_add(k).expect("exponent overflow");
                (e, c.clone())
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Formal partial derivative in `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * Rat::from_integer(e[i].into()));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single-term polynomial; `None` for anything else.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let mut it = self.terms.iter();
        let (e, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        let neg: Exponent = e.iter().map(|x| x.checked_neg().expect("exponent overflow")).collect();
        Some(Self::monomial(neg, c.recip()))
    }

    /// Composition `self(images[0], ..., images[n-1])`.
    ///
    /// Every image must live in the same ring. A negative power needs its
    /// image to be a monomial; otherwise the result is not Laurent and
    /// `None` is returned.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Option<Self> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                let factor = if k >= 0 {
                    img.pow(k as u32)
                } else {
                    img.monomial_inverse()?.pow(k.unsigned_abs() as u32)
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Some(out)
    }

    /// Smallest exponent of `x_i` among the terms, `None` for zero.
    pub fn min_exponent(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[i]).min()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(add_exponents(a, b), x * y);
            }
        }
        out
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, exponent: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in exponent.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        if k == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, k)?;
        }
    }
    Ok(())
}

/// Writes `c·m` as one signed summand; `first` controls the leading sign.
/// `trailer` is appended after the monomial (used for `d_i`).
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    exponent: &[i64],
    coeff: &Rat,
    trailer: Option<&str>,
) -> fmt::Result {
    let negative = coeff.is_negative();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let magnitude = coeff.abs();
    let bare = exponent.iter().all(|&k| k == 0);
    let mut wrote = false;
    if !magnitude.is_one() || (bare && trailer.is_none()) {
        write!(f, "{magnitude}")?;
        wrote = true;
    }
    if !bare {
        if wrote {
            f.write_str(" ")?;
        }
        write_monomial(f, exponent)?;
        wrote = true;
    }
    if let Some(t) = trailer {
        if wrote {
            f.write_str(" ")?;
        }
        f.write_str(t)?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            write_term(f, k == 0, e, c, None)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(3, i)
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &x(0) + &x(1);
        let q = &x(0) - &x(1);
        let prod = &p * &q;
        assert_eq!(prod, &x(0).pow(2) - &x(1).pow(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_of_negative_power() {
        let p = LaurentPoly::monomial(vec![-2, 1, 0], rat(3));
        assert_eq!(p.derivative(0), LaurentPoly::monomial(vec![-3, 1, 0], rat(-6)));
        assert!(p.derivative(2).is_zero());
    }

    #[test]
    fn substitution_through_monomials() {
        // x1 x2 with x1 -> y1, x2 -> y1 y2 gives y1^2 y2.
        let p = &x(0) * &x(1);
        let images = [x(0), &x(0) * &x(1), x(2)];
        assert_eq!(p.substitute(&images).unwrap(), LaurentPoly::monomial(vec![2, 1, 0], rat(1)));
        let inv = LaurentPoly::monomial(vec![0, -1, 0], rat(1));
        assert_eq!(inv.substitute(&images).unwrap(), LaurentPoly::monomial(vec![-1, -1, 0], rat(1)));
        let bad = [&x(0) + &x(1), x(1), x(2)];
        assert!(LaurentPoly::monomial(vec![-1, 0, 0], rat(1)).substitute(&bad).is_none());
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&x(0).scale(&ratio(1, 2)) - &x(1).pow(2)) + &LaurentPoly::constant(3, rat(-3));
        assert_eq!(p.to_string(), "-3 - x2^2 + 1/2 x1");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(LaurentPoly::monomial(vec![-1, 2, 0], rat(1)).to_string(), "x1^-1 x2^2");
    }
}

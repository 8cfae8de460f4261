//! Checks run against the symbolic representation: integrability and
//! tangency of generators, chart replays, first integrals, and the
//! rectifying coordinate change produced by localization.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::blowup::Chart;
use crate::linalg::{member, Mat};
use crate::presentation::{Localization, Presentation, RationalPoint};
use crate::rat::{denominator_lcm, dot, format_rat, to_i64, Rat};
use crate::subspace::{IndexSet, Subspace};

use super::field::{bracket, is_log_tangent, monomial_field, pullback_chart, saturate_exceptional, VectorField};
use super::laurent::{Exponent, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, failures: Vec<String>, success: &str) -> Self {
        let ok = failures.is_empty();
        let detail = if ok { success.to_string() } else { failures.join("; ") };
        Check { name: name.to_string(), ok, detail }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Whether `target` is a polynomial combination of `generators`.
///
/// Cofactors are restricted to monomials `x^e` (`e ≥ 0`) for which some
/// term of `x^e · g` lands on a term of `target`; the resulting linear
/// system over ℚ is solved exactly. A `true` answer is always correct. For
/// monomial presentations, where brackets are `0` or `aᵢ∂ᵢ`, the answer is
/// also complete.
pub fn in_module(target: &VectorField, generators: &[VectorField]) -> bool {
    if target.is_zero() {
        return true;
    }
    let n = target.n();
    let mut candidates: BTreeSet<(usize, Exponent)> = BTreeSet::new();
    for (gi, g) in generators.iter().enumerate() {
        for l in 0..n {
            for (eg, _) in g.component(l).terms() {
                for (eb, _) in target.component(l).terms() {
                    let e: Exponent = eb.iter().zip(eg).map(|(b, g)| b - g).collect();
                    if e.iter().all(|&x| x >= 0) {
                        candidates.insert((gi, e));
                    }
                }
            }
        }
    }
    if candidates.is_empty() {
        return false;
    }
    let products: Vec<VectorField> = candidates
        .iter()
        .map(|(gi, e)| generators[*gi].mul_poly(&LaurentPoly::monomial(e.clone(), Rat::one())))
        .collect();

    let mut coords: BTreeMap<(usize, Exponent), usize> = BTreeMap::new();
    for f in products.iter().chain(std::iter::once(target)) {
        for (l, c) in f.components().iter().enumerate() {
            for (e, _) in c.terms() {
                let next = coords.len();
                coords.entry((l, e.clone())).or_insert(next);
            }
        }
    }
    let flatten = |f: &VectorField| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); coords.len()];
        for (l, c) in f.components().iter().enumerate() {
            for (e, x) in c.terms() {
                v[coords[&(l, e.clone())]] = x.clone();
            }
        }
        v
    };
    let rows: Vec<Vec<Rat>> = products.iter().map(flatten).collect();
    member(&Mat::from_rows(coords.len(), &rows), &flatten(target)).is_some()
}

/// Log tangency and bracket closure of an explicit generator list.
///
/// These are the computable consequences of the foliation being a module of
/// logarithmic fields closed under bracket.
pub fn verify_fields(divisor: &IndexSet, generators: &[VectorField]) -> Report {
    let mut report = Report::default();
    let tangency = generators
        .iter()
        .filter(|g| !is_log_tangent(g, divisor))
        .map(|g| format!("{g} is not tangent to the divisor"))
        .collect();
    report.push(Check::new("log_tangency", tangency, "every generator is logarithmic"));

    let mut closure = Vec::new();
    for (a, ga) in generators.iter().enumerate() {
        for gb in &generators[a + 1..] {
            let b = bracket(ga, gb);
            if !in_module(&b, generators) {
                closure.push(format!("[{ga}, {gb}] = {b} is not in the generated module"));
            }
        }
    }
    report.push(Check::new(
        "bracket_closure",
        closure,
        "pairwise brackets lie in the generated module (integrability consequence)",
    ));
    report
}

pub fn verify_presentation(p: &Presentation) -> Report {
    verify_fields(p.divisor(), &p.generators())
}

/// Pullback through the chart followed by saturation of the exceptional
/// coordinate.
pub fn strict_transform(w: &VectorField, chart: &Chart) -> VectorField {
    saturate_exceptional(&pullback_chart(w, chart), chart.j()).0
}

/// Compares the closed-form chart transform of `before` with the symbolic
/// strict transform of every basis generator, checks the resulting span
/// against `after`, and checks that first-integral exponents transport.
pub fn check_chart_step(before: &Subspace, chart: &Chart, after: &Subspace) -> Check {
    let mut failures = Vec::new();
    let mut images = Vec::new();
    for a in before.basis().iter_rows() {
        let closed = chart.vector_transform(a).expect("dimension matches");
        let symbolic = strict_transform(&monomial_field(a), chart);
        let expected = monomial_field(&closed);
        if symbolic != expected {
            failures.push(format!("strict transform {symbolic} differs from {expected}"));
        }
        images.push(closed);
    }
    match Subspace::span(before.ambient(), &images) {
        Ok(s) if &s == after => {}
        _ => failures.push("transformed subspace differs from the chart subspace".into()),
    }
    let transported = before.perp().map(|m| chart.exponent_transform(m).expect("dimension matches"));
    if transported.as_ref() != Ok(&after.perp()) {
        failures.push("first-integral exponents do not transport through the chart".into());
    }
    Check::new("chart_oracle", failures, &format!("{} matches the symbolic strict transform", chart.label()))
}

/// Replays the last history entry if it is a chart step.
pub fn replay_last_chart(p: &Presentation) -> Option<Check> {
    let chart = Chart::from_label(p.n(), p.history().last()?)?;
    let before = p
        .subspace()
        .map(|a| chart.inverse_vector_transform(a).expect("dimension matches"))
        .expect("dimension matches");
    Some(check_chart_step(&before, &chart, p.subspace()))
}

/// Scales a rational vector to an integer exponent vector.
pub fn integer_exponent(m: &[Rat]) -> Exponent {
    let d = Rat::from_integer(denominator_lcm(m));
    m.iter()
        .map(|x| to_i64(&(x * &d)).expect("exponent fits in i64"))
        .collect()
}

/// First integrals: `x^m` is annihilated by every generator for integer
/// `m ∈ V⊥`, and for `samples` random integer `m ∉ V⊥` each monomial
/// generator acts by the pairing `⟨a, m⟩`, not all zero.
pub fn check_first_integrals<R: Rng>(p: &Presentation, rng: &mut R, samples: usize) -> Check {
    let n = p.n();
    let generators = p.generators();
    let perp = p.subspace().perp();
    let mut failures = Vec::new();
    for m in perp.basis().iter_rows() {
        let f = LaurentPoly::monomial(integer_exponent(m), Rat::one());
        for g in &generators {
            let image = g.apply(&f);
            if !image.is_zero() {
                failures.push(format!("{g} does not annihilate x^{:?}: got {image}", f.terms().next().map(|t| t.0)));
            }
        }
    }
    let mut tried = 0;
    let mut attempts = 0;
    while tried < samples && attempts < samples * 50 {
        attempts += 1;
        let m: Exponent = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let mr: Vec<Rat> = m.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect();
        if perp.contains(&mr) {
            continue;
        }
        tried += 1;
        let f = LaurentPoly::monomial(m.clone(), Rat::one());
        let mut some_nonzero = false;
        for a in p.subspace().basis().iter_rows() {
            let pairing = dot(a, &mr);
            some_nonzero |= !pairing.is_zero();
            if monomial_field(a).apply(&f) != f.scale(&pairing) {
                failures.push(format!("eigenvalue of x^{m:?} under {} is not the pairing", monomial_field(a)));
            }
        }
        if !some_nonzero {
            failures.push(format!("x^{m:?} with m outside V⊥ is annihilated by every generator"));
        }
    }
    Check::new(
        "first_integrals",
        failures,
        &format!("{} first-integral exponents and {tried} non-integrals checked", perp.dim()),
    )
}

/// Pushes block-basis generators through the emitted coordinate change by
/// exact substitution: first-kind generators must become `(zᵢ + pᵢ)∂_{zᵢ}`
/// and second-kind generators their own monomial field in `z`.
///
/// A multiplicative coordinate `z_k = x^{μ}` with rational `μ` is handled
/// through `z_k^d`, `d` clearing denominators; `W(z_k) = c·z_k` holds iff
/// `W(z_k^d) = d·c·z_k^d`.
pub fn check_rectification(loc: &Localization, point: &RationalPoint) -> Check {
    let Some(change) = &loc.change else {
        return Check::new(
            "rectification",
            vec![],
            "no coordinate change emitted (coupled pivots); presentation data only",
        );
    };
    let n = point.len();
    let mut failures = Vec::new();

    let shifted: Vec<(usize, LaurentPoly)> = change
        .shifts
        .iter()
        .map(|(&i, p)| (i, &LaurentPoly::var(n, i) - &LaurentPoly::constant(n, p.clone())))
        .collect();
    let multiplicative: Vec<(usize, Rat, LaurentPoly)> = change
        .multipliers
        .iter()
        .map(|(&k, exps)| {
            let mut mu = vec![Rat::zero(); n];
            mu[k] = Rat::one();
            for (&i, e) in exps {
                mu[i] = e.clone();
            }
            let e = integer_exponent(&mu);
            let d = Rat::from_integer(denominator_lcm(&mu));
            (k, d, LaurentPoly::monomial(e, Rat::one()))
        })
        .collect();

    let check_field = |row: &[Rat], pivot: Option<usize>| -> Vec<String> {
        let mut failures = Vec::new();
        let w = monomial_field(row);
        for (i, z) in &shifted {
            let expected = if Some(*i) == pivot { LaurentPoly::var(n, *i) } else { LaurentPoly::zero(n) };
            let got = w.apply(z);
            if got != expected {
                failures.push(format!("{w} applied to z{} gives {got}, expected {expected}", i + 1));
            }
        }
        for (k, d, zd) in &multiplicative {
            let c = if pivot.is_some() { Rat::zero() } else { row[*k].clone() };
            let expected = zd.scale(&(d * c));
            let got = w.apply(zd);
            if got != expected {
                failures.push(format!("{w} applied to z{}^{} gives {got}, expected {expected}", k + 1, format_rat(d)));
            }
        }
        failures
    };
    for r in &loc.block.first_kind {
        if point.coords()[r.pivot].is_zero() {
            failures.push(format!("pivot {} sits at a zero coordinate", r.pivot + 1));
        }
        failures.extend(check_field(&r.row, Some(r.pivot)));
    }
    for r in &loc.block.second_kind {
        failures.extend(check_field(&r.row, None));
    }
    Check::new(
        "rectification",
        failures,
        "first-kind generators become unit multiples of coordinate fields; second-kind stay monomial",
    )
}

//! Acceptance suite: every criterion runs at its stated sample count with
//! exact equality, and prints one PASS/FAIL line.
//!
//! Run with `cargo test -p monofol --test acceptance -- --nocapture` to
//! see the lines.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use common::*;
use monofol::cli::{execute, Command, Job};
use monofol::rat::{dot, rat};
use monofol::symbolic::{
    bracket, check_rectification, integer_exponent, monomial_field, pullback_chart,
    saturate_exceptional, verify_fields, verify_presentation, LaurentPoly, VectorField,
};
use monofol::{atlas, member, IndexSet, Presentation, Rat, Subspace};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn duality_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for case in 0..500 {
        let n = rng.gen_range(2..=6);
        let chart = random_chart(&mut rng, n);
        let a = random_vector(&mut rng, n);
        let m = random_vector(&mut rng, n);
        let lhs = dot(&chart.vector_transform(&a).unwrap(), &chart.exponent_transform(&m).unwrap());
        ensure(lhs == dot(&a, &m), || format!("case {case}: pairing changed for {}", chart.label()))?;
    }
    Ok("500 cases, exact".into())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut generators = 0;
    for case in 0..200 {
        let n = rng.gen_range(2..=6);
        let v = random_subspace(&mut rng, n);
        let chart = random_chart(&mut rng, n);
        for a in v.basis().iter_rows() {
            let pulled = pullback_chart(&monomial_field(a), &chart);
            let (strict, _) = saturate_exceptional(&pulled, chart.j());
            let closed = monomial_field(&chart.vector_transform(a).unwrap());
            ensure(strict == closed, || {
                format!("case {case}: {} gives {strict}, closed form {closed}", chart.label())
            })?;
            generators += 1;
        }
        let image = v.map(|a| chart.vector_transform(a).unwrap()).unwrap();
        let transported = v.perp().map(|m| chart.exponent_transform(m).unwrap()).unwrap();
        ensure(image.perp() == transported, || format!("case {case}: perp not transported"))?;
    }
    Ok(format!("200 subspaces, {generators} generators term-for-term"))
}

fn block_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut gaps = 0;
    for case in 0..300 {
        let n = rng.gen_range(1..=6);
        let v = random_subspace(&mut rng, n);
        let i1 = random_index_set(&mut rng, n, 0.5);
        let i2: IndexSet = (0..n).filter(|i| !i1.contains(i)).collect();
        let b = v.block_basis(&i1, &i2).unwrap();
        let rows = b.rows();
        let err = |what: &str| format!("case {case}: {what}");

        let spanned = Subspace::span(n, &rows).unwrap();
        ensure(spanned == v && rows.len() == v.dim(), || err("rows do not form a basis of V"))?;
        ensure(rows.iter().all(|r| member(v.basis(), r).is_some()), || err("row outside V"))?;

        let pivots: Vec<usize> = b.first_kind.iter().map(|r| r.pivot).chain(b.second_kind.iter().map(|r| r.pivot)).collect();
        for r in &b.first_kind {
            ensure(i1.contains(&r.pivot) && r.row[r.pivot].is_one(), || err("first-kind pivot"))?;
            ensure(pivots.iter().all(|&p| p == r.pivot || r.row[p].is_zero()), || err("first-kind pivot column"))?;
            let rebuilt: Vec<Rat> = (0..n)
                .map(|c| if c == r.pivot { Rat::one() } else { &r.a_part[c] + &r.b_part[c] })
                .collect();
            ensure(rebuilt == r.row, || err("row is not e_pivot + A + B"))?;
            ensure(r.a_part.iter().enumerate().all(|(c, x)| x.is_zero() || (i1.contains(&c) && !pivots.contains(&c))), || err("A support"))?;
            ensure(r.b_part.iter().enumerate().all(|(c, x)| x.is_zero() || (i2.contains(&c) && !pivots.contains(&c))), || err("B support"))?;
        }
        for r in &b.second_kind {
            ensure(i2.contains(&r.pivot) && r.row[r.pivot].is_one(), || err("second-kind pivot"))?;
            ensure(i1.iter().all(|&c| r.row[c].is_zero()), || err("second-kind I1 part nonzero"))?;
            ensure(pivots.iter().all(|&p| p == r.pivot || r.row[p].is_zero()), || err("second-kind pivot column"))?;
        }
        ensure(v.intersect_coordinate(&i2) == b.second_kind_span(), || err("V ∩ F^I2 differs from second-kind span"))?;

        let all_in = b.truncated_basis().iter().all(|t| v.contains(t));
        ensure(all_in == !b.gap, || err("truncated vectors in V disagrees with gap flag"))?;
        gaps += usize::from(b.gap);
    }

    let line = Subspace::span(2, &[v(&[1, 1])]).unwrap();
    let b = line.block_basis(&IndexSet::from([0, 1]), &IndexSet::new()).unwrap();
    ensure(b.gap, || "span{(1,1)} with I2 = ∅ must be gapped".into())?;
    ensure(!line.contains(&b.truncated_basis()[0]), || "e1 must not lie in span{(1,1)}".into())?;
    Ok(format!("300 partitions ({gaps} gapped) + documented counterexample"))
}

fn localization_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut emitted = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=6);
        let p = random_presentation(&mut rng, n);
        let point = random_point(&mut rng, n);
        let loc = p.localize(&point).unwrap();
        let q = &loc.presentation;
        ensure(q.rank() == p.rank(), || format!("case {case}: rank changed"))?;
        let expected: IndexSet = p.divisor().iter().copied().filter(|&i| point.coords()[i].is_zero()).collect();
        ensure(q.divisor() == &expected, || format!("case {case}: divisor {:?} != {expected:?}", q.divisor()))?;
        ensure(loc.change.is_some() == !loc.block.gap, || format!("case {case}: change emitted in gapped case"))?;
        if loc.change.is_some() {
            emitted += 1;
            let check = check_rectification(&loc, &point);
            ensure(check.ok, || format!("case {case}: {}", check.detail))?;
        }
    }
    ensure(emitted >= 50, || format!("only {emitted} coordinate changes exercised"))?;
    Ok(format!("200 cases, {emitted} coordinate changes verified by substitution"))
}

fn first_integrals() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut presentations = 0;
    while presentations < 100 {
        let n = rng.gen_range(1..=6);
        let p = random_presentation(&mut rng, n);
        if p.rank() == 0 {
            continue;
        }
        presentations += 1;
        let perp = p.subspace().perp();
        let fields: Vec<VectorField> = p.subspace().basis().iter_rows().map(monomial_field).collect();
        for m in perp.basis().iter_rows() {
            let f = LaurentPoly::monomial(integer_exponent(m), Rat::one());
            ensure(fields.iter().all(|w| w.apply(&f).is_zero()), || "x^m with m ∈ V⊥ is not a first integral".into())?;
        }
        let mut sampled = 0;
        while sampled < 50 {
            let m = random_int_vector(&mut rng, n, 3);
            if perp.contains(&m) {
                continue;
            }
            sampled += 1;
            let exps: Vec<i64> = m.iter().map(|x| monofol::rat::to_i64(x).unwrap()).collect();
            let f = LaurentPoly::monomial(exps, Rat::one());
            let mut nonzero = false;
            for (a, w) in p.subspace().basis().iter_rows().zip(&fields) {
                let pairing = dot(a, &m);
                nonzero |= !pairing.is_zero();
                ensure(w.apply(&f) == f.scale(&pairing), || "eigenvalue differs from pairing".into())?;
            }
            ensure(nonzero, || "m ∉ V⊥ annihilated by all generators".into())?;
        }
    }
    Ok("100 presentations, 50 non-integrals each".into())
}

fn integrability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let a = monomial_field(&random_vector(&mut rng, n));
        let b = monomial_field(&random_vector(&mut rng, n));
        ensure(bracket(&a, &b).is_zero(), || format!("[{a}, {b}] ≠ 0"))?;
    }

    let mut verified = 0;
    for seed in 0..20 {
        let n = rng.gen_range(2..=5);
        let start = random_presentation(&mut rng, n);
        let mut frontier = vec![start];
        for _depth in 0..3 {
            let mut next = Vec::new();
            for p in &frontier {
                let report = verify_presentation(p);
                ensure(report.ok(), || format!("seed {seed}: {:?} failed: {:?}", p.history(), report.failures().collect::<Vec<_>>()))?;
                verified += 1;
                for (_, q) in atlas(p, &random_center(&mut rng, n)).unwrap() {
                    next.push(q);
                }
                next.push(p.localize(&random_point(&mut rng, n)).unwrap().presentation);
            }
            frontier = next;
        }
        for p in &frontier {
            let report = verify_presentation(p);
            ensure(report.ok(), || format!("seed {seed}: {:?} failed", p.history()))?;
            verified += 1;
        }
    }

    let x2d1 = VectorField::new(vec![LaurentPoly::monomial(vec![0, 1], rat(1)), LaurentPoly::zero(2)]);
    ensure(!verify_fields(&IndexSet::from([0]), &[x2d1]).ok(), || "negative control passed".into())?;
    Ok(format!("{verified} pipeline presentations verified; negative control rejected"))
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn cli_round_trip() -> Outcome {
    let mut blowup = Job::new(Command::Blowup, "running_example.json");
    blowup.center = Some(vec![1, 2]);
    blowup.chart = Some(1);
    let out = execute(&blowup, &golden("running_example.json"));
    ensure(out.render() == golden("blowup_running_example.expected.json"), || "blowup golden differs".into())?;

    let mut localize = Job::new(Command::Localize, "diagonal.json");
    localize.point = Some(vec![rat(1), rat(0)]);
    let out = execute(&localize, &golden("diagonal.json"));
    ensure(out.render() == golden("localize_diagonal.expected.json"), || "localize golden differs".into())?;

    let chart = execute(&blowup, &golden("running_example.json")).render();
    let mut nested = Job::new(Command::Atlas, "chart.json");
    nested.center = Some(vec![2, 3]);
    let out = execute(&nested, &chart);
    ensure(out.render() == golden("atlas_nested.expected.json"), || "nested atlas golden differs".into())?;

    // Emitted presentations re-parse to the same canonical bytes.
    let reparsed: monofol::PresentationJson = serde_json::from_str(&chart).unwrap();
    let again = Presentation::try_from(&reparsed).unwrap();
    let text = serde_json::to_string_pretty(&monofol::PresentationJson::from(&again)).unwrap() + "\n";
    ensure(text == chart, || "re-serialized presentation differs".into())?;
    Ok("3 golden files byte-identical".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 7] = [
        ("1 duality identity", duality_identity),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 block form", block_form),
        ("4 localization soundness", localization_soundness),
        ("5 first integrals", first_integrals),
        ("6 abelian/integrability", integrability),
        ("7 CLI round-trip", cli_round_trip),
    ];
    let started = Instant::now();
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        let t = Instant::now();
        match criterion() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail} ({:.2?})", t.elapsed()),
            Err(why) => {
                println!("[FAIL] criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    let total = started.elapsed();
    let fast = total < Duration::from_secs(60);
    println!("[{}] suite runtime {total:.2?} (limit 60s)", if fast { "PASS" } else { "FAIL" });
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(fast, "suite took {total:?}");
}

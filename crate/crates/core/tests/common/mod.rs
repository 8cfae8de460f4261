#![allow(dead_code)]

use monofol::rat::{rat, ratio};
use monofol::{Center, Chart, IndexSet, Presentation, Rat, RationalPoint, Subspace};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn v(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let num = rng.gen_range(-4..=4);
    if rng.gen_bool(0.2) {
        ratio(num, rng.gen_range(1..=3))
    } else {
        rat(num)
    }
}

/// Entries are mostly zero so that coordinate structure shows up.
pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rat> {
    (0..n)
        .map(|_| if rng.gen_bool(0.35) { Rat::from_integer(0.into()) } else { random_rat(rng) })
        .collect()
}

pub fn random_int_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Rat> {
    (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

pub fn random_subspace<R: Rng>(rng: &mut R, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    let rows: Vec<Vec<Rat>> = (0..k).map(|_| random_vector(rng, n)).collect();
    let mut s = Subspace::span(n, &rows).unwrap();
    // Sometimes add unit vectors so free directions appear.
    if rng.gen_bool(0.3) && n > 0 {
        let mut rows = s.basis_vectors();
        let i = rng.gen_range(0..n);
        rows.push(monofol::rat::unit_vector(n, i));
        s = Subspace::span(n, &rows).unwrap();
    }
    s
}

pub fn random_index_set<R: Rng>(rng: &mut R, n: usize, p: f64) -> IndexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

pub fn random_presentation<R: Rng>(rng: &mut R, n: usize) -> Presentation {
    let divisor = random_index_set(rng, n, 0.5);
    Presentation::new(n, divisor, random_subspace(rng, n)).unwrap()
}

pub fn random_center<R: Rng>(rng: &mut R, n: usize) -> Center {
    assert!(n >= 2);
    let r = rng.gen_range(2..=n);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    Center::new(n, idx[..r].iter().copied().collect()).unwrap()
}

pub fn random_chart<R: Rng>(rng: &mut R, n: usize) -> Chart {
    let center = random_center(rng, n);
    let members: Vec<usize> = center.indices().iter().copied().collect();
    let j = *members.choose(rng).unwrap();
    Chart::new(center, j).unwrap()
}

/// Zero/nonzero pattern and values both random.
pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> RationalPoint {
    RationalPoint(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    rat(0)
                } else {
                    let x = random_rat(rng);
                    if x == rat(0) { rat(1) } else { x }
                }
            })
            .collect(),
    )
}

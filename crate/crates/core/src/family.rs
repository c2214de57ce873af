//! Seeded random product specifications for identity checks.
//!
//! The family: one to three factors, supports drawn from all naturals,
//! multiples of `r <= 4`, or non-empty subsets of `{1..6}`; exponents in
//! `{-3..3} \ {0}`; arguments in `{1, -1, 1/2, 2}`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::product::{Factor, ProductSpec, SupportSet};

pub type FamilyRng = ChaCha8Rng;

pub fn rng(seed: u64) -> FamilyRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn subset<R: Rng>(rng: &mut R, universe: &[u64]) -> Vec<u64> {
    loop {
        let picked: Vec<u64> = universe.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !picked.is_empty() {
            return picked;
        }
    }
}

pub fn random_support<R: Rng>(rng: &mut R) -> SupportSet {
    match rng.gen_range(0..3) {
        0 => SupportSet::AllNaturals,
        1 => SupportSet::MultiplesOf(rng.gen_range(1..=4)),
        _ => SupportSet::finite(&subset(rng, &[1, 2, 3, 4, 5, 6])).expect("non-empty distinct"),
    }
}

pub fn random_exponent<R: Rng>(rng: &mut R) -> i64 {
    *[-3, -2, -1, 1, 2, 3].choose(rng).expect("non-empty")
}

pub fn random_argument<R: Rng>(rng: &mut R) -> Rational {
    let (n, d) = *[(1, 1), (-1, 1), (1, 2), (2, 1)].choose(rng).expect("non-empty");
    Rational::new(n.into(), d.into())
}

pub fn random_spec<R: Rng>(rng: &mut R) -> ProductSpec {
    let count = rng.gen_range(1..=3);
    let factors = (0..count)
        .map(|_| {
            let support = random_support(rng);
            let z = random_argument(rng);
            Factor::new(support, z, random_exponent(rng)).expect("valid by construction")
        })
        .collect();
    ProductSpec::new(factors).expect("at least one factor")
}

pub fn random_exponents<R: Rng>(rng: &mut R, len: usize) -> Vec<i64> {
    (0..len).map(|_| random_exponent(rng)).collect()
}

/// Two products over disjoint finite supports drawn from `{1..8}`.
pub fn random_disjoint_pair<R: Rng>(rng: &mut R) -> (ProductSpec, ProductSpec) {
    let mut universe: Vec<u64> = (1..=8).collect();
    universe.shuffle(rng);
    let split = rng.gen_range(1..universe.len());
    let side = |rng: &mut R, elements: &[u64]| {
        let mut elements = elements.to_vec();
        let mut factors = Vec::new();
        while !elements.is_empty() {
            let take = rng.gen_range(1..=elements.len());
            let chunk: Vec<u64> = elements.drain(..take).collect();
            let support = SupportSet::finite(&chunk).expect("distinct positive");
            factors.push(Factor::new(support, random_argument(rng), random_exponent(rng)).expect("valid"));
        }
        ProductSpec::new(factors).expect("non-empty")
    };
    let a = side(rng, &universe[..split]);
    let b = side(rng, &universe[split..]);
    (a, b)
}

/// Distinct parts drawn from `{1..8}`, at least `min_len` of them, in random order.
pub fn random_parts<R: Rng>(rng: &mut R, min_len: usize) -> Vec<u64> {
    loop {
        let mut parts = subset(rng, &[1, 2, 3, 4, 5, 6, 7, 8]);
        if parts.len() >= min_len {
            parts.shuffle(rng);
            return parts;
        }
    }
}

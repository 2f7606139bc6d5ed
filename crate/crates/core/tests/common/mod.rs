#![allow(dead_code)]

use polymatroid::corpus::{random_spec, Shape};
use polymatroid::{BaseSet, ExponentVector, PlpSpec, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn spec(seed: u64, shape: Shape, max_n: usize, max_d: u32) -> PlpSpec {
    random_spec(&mut rng(seed), shape, max_n, max_d)
}

/// Base set of a product of the ideals generated by the variables in each subset.
pub fn subset_product(n: usize, factors: &[Subset]) -> BaseSet {
    let mut acc = vec![ExponentVector::zeros(n)];
    for f in factors {
        let mut next = Vec::new();
        for u in &acc {
            for i in f.iter() {
                next.push(u.add(&ExponentVector::unit(n, i)));
            }
        }
        acc = next;
    }
    BaseSet::new(n, acc).unwrap()
}

/// A random product of 1 to 3 nonempty subsets of `[n]`.
pub fn random_subset_product(seed: u64, n: usize) -> BaseSet {
    let mut r = rng(seed);
    let count = r.gen_range(1..=3);
    let factors: Vec<Subset> = (0..count).map(|_| Subset(r.gen_range(1..(1u64 << n)))).collect();
    subset_product(n, &factors)
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn set(v: &[&[usize]]) -> Vec<Subset> {
    let mut out: Vec<Subset> = v.iter().map(|s| Subset::from_indices(s.iter().map(|i| i - 1))).collect();
    out.sort();
    out
}

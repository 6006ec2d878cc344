#![allow(dead_code)]

use frobgen_core::{ExponentVector, MonomialOrder, Poly, Ring, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u32; 3] = [2, 3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(p: u32, d: usize) -> Ring {
    let names: Vec<String> = ["x", "y", "z", "w"].iter().take(d).map(|s| s.to_string()).collect();
    RingContext::new(p, &names, MonomialOrder::Grevlex).unwrap()
}

/// A random polynomial with up to `max_terms` terms of total degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> Poly {
    let d = ring.nvars();
    let p = ring.p();
    let n = rng.gen_range(1..=max_terms);
    let terms = (0..n).map(|_| {
        let total = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; d];
        for _ in 0..total {
            e[rng.gen_range(0..d)] += 1;
        }
        (ExponentVector::new(e), rng.gen_range(1..p))
    });
    Poly::from_terms(ring, terms.collect::<Vec<_>>())
}

/// A random non-constant polynomial.
pub fn random_nonconstant(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> Poly {
    loop {
        let f = random_poly(rng, ring, max_deg, max_terms);
        if !f.is_constant() {
            return f;
        }
    }
}

/// One instance of the random suite: `p` in {2,3,5}, `d <= 3`, `deg f <= 4`, `s <= 2`.
pub struct Instance {
    pub ring: Ring,
    pub f: Poly,
    pub other: Poly,
    pub s: u32,
}

pub fn suite(seed: u64, count: usize) -> Vec<Instance> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let p = PRIMES[i % PRIMES.len()];
            let d = r.gen_range(1..=3);
            let ring = ring(p, d);
            let f = random_nonconstant(&mut r, &ring, 4, 4);
            let other = random_nonconstant(&mut r, &ring, 4, 4);
            let s = r.gen_range(1..=2);
            Instance { ring, f, other, s }
        })
        .collect()
}

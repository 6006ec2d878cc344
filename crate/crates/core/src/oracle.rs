//! Brute-force reference implementations used to cross-check the production
//! routines. They share no arithmetic with the code they check: products are
//! formed by naive term lists, binomials come from Pascal's triangle, and the
//! image of `D^(s)` is enumerated operator by operator.

use crate::context::Ring;
use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::frobenius::FrobDecomposition;
use crate::ideal::Ideal;
use crate::monomial::{box_iter, ExponentVector};
use crate::poly::Poly;

/// Default bound on the number of divided powers `oracle_ds_image` enumerates.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 4096;

type Terms = Vec<(Vec<u32>, u64)>;

fn to_terms(f: &Poly) -> Terms {
    f.terms().map(|(e, c)| (e.as_slice().to_vec(), c as u64)).collect()
}

fn from_terms(ring: &Ring, terms: Terms) -> Poly {
    let p = ring.p() as u64;
    Poly::from_terms(ring, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), (c % p) as FieldScalar)))
}

fn naive_mul(a: &Terms, b: &Terms, p: u64) -> Result<Terms> {
    let mut out: Terms = Vec::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = Vec::with_capacity(ea.len());
            for (x, y) in ea.iter().zip(eb) {
                e.push(x.checked_add(*y).ok_or(Error::ExponentOverflow)?);
            }
            let c = ca * cb % p;
            match out.iter_mut().find(|(oe, _)| *oe == e) {
                Some(slot) => slot.1 = (slot.1 + c) % p,
                None => out.push((e, c)),
            }
        }
    }
    out.retain(|(_, c)| *c != 0);
    Ok(out)
}

/// `f^n` by `n` naive multiplications.
pub fn oracle_pow(f: &Poly, n: u64) -> Result<Poly> {
    let ring = f.ring();
    let p = ring.p() as u64;
    let base = to_terms(f);
    let mut acc: Terms = vec![(vec![0; ring.nvars()], 1 % p)];
    for _ in 0..n {
        acc = naive_mul(&acc, &base, p)?;
    }
    Ok(from_terms(ring, acc))
}

/// `sum_a c_a^(p^s) x^a`, with the powers taken by naive multiplication.
pub fn oracle_recompose(dec: &FrobDecomposition) -> Result<Poly> {
    let ring = dec.ring();
    let p = ring.p() as u64;
    let q = (p as u32).checked_pow(dec.level()).ok_or(Error::ExponentOverflow)?;
    let mut out: Terms = Vec::new();
    for (alpha, c) in dec.coords() {
        let base = to_terms(c);
        let mut power: Terms = vec![(vec![0; ring.nvars()], 1)];
        for _ in 0..q {
            power = naive_mul(&power, &base, p)?;
        }
        let shifted = naive_mul(&power, &vec![(alpha.as_slice().to_vec(), 1)], p)?;
        for (e, c) in shifted {
            match out.iter_mut().find(|(oe, _)| *oe == e) {
                Some(slot) => slot.1 = (slot.1 + c) % p,
                None => out.push((e, c)),
            }
        }
    }
    out.retain(|(_, c)| *c != 0);
    Ok(from_terms(ring, out))
}

/// Binomials mod p from Pascal's triangle, grown on demand.
struct Pascal {
    p: u64,
    rows: Vec<Vec<u64>>,
}

impl Pascal {
    fn new(p: u64) -> Self {
        Pascal { p, rows: vec![vec![1 % p]] }
    }

    fn get(&mut self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let mut row = vec![1 % self.p; prev.len() + 1];
            for i in 1..prev.len() {
                row[i] = (prev[i - 1] + prev[i]) % self.p;
            }
            self.rows.push(row);
        }
        self.rows[n][k]
    }
}

/// The ideal `D^(s) · f`, generated by `D_b(f)` for every `b` with `b_i < p^s`.
pub fn oracle_ds_image(f: &Poly, s: u32, limit: u128) -> Result<Ideal> {
    let ring = f.ring();
    let p = ring.p() as u64;
    let q = (p as u32).checked_pow(s).ok_or(Error::ExponentOverflow)?;
    let count = (q as u128).checked_pow(ring.nvars() as u32).unwrap_or(u128::MAX);
    if count > limit {
        return Err(Error::EnumerationLimit(count, limit));
    }
    let mut pascal = Pascal::new(p);
    let terms = to_terms(f);
    let mut images = Vec::new();
    for b in box_iter(ring.nvars(), q - 1) {
        let mut out: Terms = Vec::new();
        for (e, c) in &terms {
            if e.iter().zip(b.as_slice()).any(|(x, y)| x < y) {
                continue;
            }
            let mut coeff = *c;
            for (x, y) in e.iter().zip(b.as_slice()) {
                coeff = coeff * pascal.get(*x as usize, *y as usize) % p;
            }
            if coeff != 0 {
                let rest = e.iter().zip(b.as_slice()).map(|(x, y)| x - y).collect();
                out.push((rest, coeff));
            }
        }
        images.push(from_terms(ring, out));
    }
    Ideal::new(ring, images)
}

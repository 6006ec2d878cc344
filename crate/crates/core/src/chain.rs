//! The descending chain `I_1(f^(p-1)) ⊇ I_2(f^(p^2-1)) ⊇ ...` and its
//! stabilization level.

use crate::error::{Error, Result};
use crate::frobenius::frobenius_root_ideal;
use crate::ideal::Ideal;
use crate::poly::{Poly, PowerLadder};

/// How many levels to compute before giving up.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LevelCap {
    /// One more than the dimension of the space of polynomials of degree
    /// below `deg f`; the chain is guaranteed to stabilize within it.
    #[default]
    Auto,
    Max(u32),
}

#[derive(Clone, Debug)]
pub struct ChainLevel {
    pub s: u32,
    pub ideal: Ideal,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub f: Poly,
    pub levels: Vec<ChainLevel>,
    pub stabilized_at: Option<u32>,
    pub cap: u32,
    /// Every generator at every level has degree below `deg f`.
    pub degrees_ok: bool,
}

impl ChainReport {
    pub fn level(&self, s: u32) -> Option<&Ideal> {
        self.levels.iter().find(|l| l.s == s).map(|l| &l.ideal)
    }
}

/// `C(n + k, k)` as u128, saturating.
fn binomial_u128(n: u64, k: u64) -> u128 {
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc.saturating_mul((n + j + 1) as u128) / (j + 1) as u128;
    }
    acc
}

/// `C(deg f - 1 + d, d) + 1`, clamped to `u32::MAX`.
pub fn auto_cap(f: &Poly) -> Result<u32> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let d = f.ring().nvars() as u64;
    let dim = binomial_u128(deg - 1, d);
    Ok(dim.saturating_add(1).min(u32::MAX as u128) as u32)
}

/// Computes `I_s(f^(p^s - 1))` for `s = 1, 2, ...` until two consecutive
/// levels agree or the cap is reached.
pub fn compute_chain(f: &Poly, cap: LevelCap) -> Result<ChainReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let deg = f.degree().unwrap();
    let cap = match cap {
        LevelCap::Auto => auto_cap(f)?,
        LevelCap::Max(n) => n.max(1),
    };
    let mut ladder = PowerLadder::new(f)?;
    let mut levels: Vec<ChainLevel> = Vec::new();
    let mut stabilized_at = None;
    let mut degrees_ok = true;
    for s in 1..=cap {
        let power = ladder.next_level()?;
        let ideal = frobenius_root_ideal(&power, s)?;
        degrees_ok &= ideal.gens().iter().all(|g| g.degree().is_some_and(|d| d < deg));
        levels.push(ChainLevel { s, ideal });
        if let [.., prev, last] = levels.as_slice() {
            if prev.ideal.ideal_eq(&last.ideal)? {
                stabilized_at = Some(prev.s);
                break;
            }
        }
    }
    Ok(ChainReport { f: f.clone(), levels, stabilized_at, cap, degrees_ok })
}

pub fn stabilization_level(report: &ChainReport) -> Result<u32> {
    report.stabilized_at.ok_or(Error::NotStabilized)
}

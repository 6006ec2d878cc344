//! Constructing and checking operators `delta` with `delta(1/f) = 1/f^p`.
//!
//! Every operator here lies in some `D^(N)` and is therefore
//! `R^(p^N)`-linear, so `delta(1/f) = 1/f^p` is equivalent to the
//! polynomial identity `delta(f^(p^N - 1)) = f^(p^N - p)`.

use std::collections::BTreeMap;

use super::{frobenius_twist, interpolate_operator, DiffOperator, OperatorExpr};
use crate::chain::ChainReport;
use crate::error::{Error, Result};
use crate::frobenius::frob_decompose;
use crate::ideal::Ideal;
use crate::monomial::ExponentVector;
use crate::poly::Poly;

/// A term `a x^alpha` of `f^(p^s - 1)` that dominates all others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastPath {
    pub alpha: ExponentVector,
    pub coefficient: u32,
    /// `a^(-1) D_alpha`, which sends `f^(p^s - 1)` to 1.
    pub operator: DiffOperator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SynthesisMethod {
    FastPath,
    Division,
}

#[derive(Clone, Debug)]
pub struct Synthesis {
    pub operator: DiffOperator,
    /// The level `N` at which `operator(f^(p^N - 1)) = f^(p^N - p)` holds.
    pub level: u32,
    pub method: SynthesisMethod,
}

/// Looks for a term `a x^alpha` of `f^(p^s - 1)` with every `alpha_i < p^s`
/// such that each other term `x^gamma` has some `gamma_i < alpha_i`. Then
/// `D_alpha` kills every other term and `a^(-1) D_alpha (f^(p^s-1)) = 1`.
///
/// Among several such terms the one with the smallest largest exponent is
/// chosen, ties broken by the lexicographically largest exponent vector.
pub fn monomial_fast_path(f: &Poly, s: u32) -> Result<Option<FastPath>> {
    let ring = f.ring();
    let q = ring.frobenius_modulus(s)?;
    let g = f.pow_ps_minus_one(s)?;
    let terms: Vec<(&ExponentVector, u32)> = g.terms().collect();
    let mut best: Option<(&ExponentVector, u32)> = None;
    for &(alpha, a) in &terms {
        if !alpha.within(q - 1) {
            continue;
        }
        let dominates = terms.iter().all(|&(gamma, _)| {
            gamma == alpha || gamma.as_slice().iter().zip(alpha.as_slice()).any(|(x, y)| x < y)
        });
        if !dominates {
            continue;
        }
        let better = match best {
            None => true,
            Some((cur, _)) => alpha
                .max_component()
                .cmp(&cur.max_component())
                .then_with(|| cur.cmp(alpha))
                .is_lt(),
        };
        if better {
            best = Some((alpha, a));
        }
    }
    let Some((alpha, a)) = best else { return Ok(None) };
    let inv = ring.field().inv(a)?;
    Ok(Some(FastPath {
        alpha: alpha.clone(),
        coefficient: a,
        operator: DiffOperator::divided_power(ring, alpha.clone(), inv),
    }))
}

/// Checks `op(f^(p^N - 1)) = f^(p^N - p)` with plain powering.
pub fn verify_delta(op: &DiffOperator, f: &Poly, level: u32) -> Result<bool> {
    if op.level() > level {
        return Err(Error::LevelMismatch { op: op.level(), requested: level });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.ring().p() as u64;
    let q = p.checked_pow(level).ok_or(Error::ExponentOverflow)?;
    let lhs = op.apply(&f.pow(q - 1)?)?;
    Ok(lhs == f.pow(q - p)?)
}

/// Picks coordinates one at a time until they generate the whole ideal.
fn generating_subset<'a>(ring: &crate::context::Ring, coords: &'a BTreeMap<ExponentVector, Poly>) -> Result<Vec<(&'a ExponentVector, &'a Poly)>> {
    let mut order: Vec<(&ExponentVector, &Poly)> = coords.iter().collect();
    order.sort_by(|a, b| {
        a.1.degree().cmp(&b.1.degree()).then_with(|| a.1.num_terms().cmp(&b.1.num_terms())).then_with(|| a.0.cmp(b.0))
    });
    let mut chosen: Vec<(&ExponentVector, &Poly)> = Vec::new();
    let mut span = Ideal::zero(ring);
    for (alpha, c) in order {
        if span.contains(c)? {
            continue;
        }
        chosen.push((alpha, c));
        span = Ideal::new(ring, chosen.iter().map(|(_, c)| (*c).clone()))?;
        if span.is_unit() {
            break;
        }
    }
    Ok(chosen)
}

fn division_operator(f: &Poly, level: u32) -> Result<DiffOperator> {
    let ring = f.ring();
    let g = f.pow_ps_minus_one(level)?;
    // f^(p^N - p) = (f^(p^(N-1) - 1))^p
    let h = if level == 1 { Poly::one(ring) } else { f.pow_ps_minus_one(level - 1)?.frobenius_power(1)? };
    let dec_g = frob_decompose(&g, level)?;
    let dec_h = frob_decompose(&h, level)?;

    let chosen = generating_subset(ring, dec_g.coords())?;
    let ideal = Ideal::new(ring, chosen.iter().map(|(_, c)| (*c).clone()))?;
    // Ideal::new keeps distinct nonzero generators in order, so indices line up.
    debug_assert_eq!(ideal.gens().len(), chosen.len());

    // Each coordinate d_b of h lies in I_N(g) = I_N(h); write d_b = sum_j q_bj c_j.
    // Then h = sum_j (sum_b q_bj^(p^N) x^b) c_j^(p^N).
    let mut lifted: Vec<Poly> = vec![Poly::zero(ring); chosen.len()];
    for (beta, d) in dec_h.coords() {
        let cof = ideal.divide_with_cofactors(d)?;
        for (slot, qj) in lifted.iter_mut().zip(cof) {
            if qj.is_zero() {
                continue;
            }
            *slot = slot.checked_add(&qj.frobenius_power(level)?.mul_term(beta, 1)?)?;
        }
    }

    let mut targets = BTreeMap::new();
    for ((alpha, _), r) in chosen.iter().zip(lifted) {
        targets.insert((*alpha).clone(), r);
    }
    let support: Vec<ExponentVector> = dec_g.coords().keys().cloned().collect();
    interpolate_operator(ring, &support, &targets)
}

/// Builds an operator of level `N` with `delta(f^(p^N-1)) = f^(p^N-p)`,
/// trying the dominant-monomial shortcut first and falling back to division
/// against the coordinates of `f^(p^N - 1)`. Fails with `NotMember` when no
/// such operator exists at this level.
pub fn synthesize_delta_at(f: &Poly, level: u32) -> Result<Synthesis> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if level == 0 {
        return Err(Error::LevelMismatch { op: 0, requested: 0 });
    }
    let p = f.ring().p() as u64;
    let (operator, method) = match monomial_fast_path(f, level)? {
        Some(fp) => {
            let lift = if level == 1 {
                Poly::one(f.ring())
            } else {
                f.pow(p.pow(level) - p)?
            };
            (fp.operator.left_multiply(&lift)?, SynthesisMethod::FastPath)
        }
        None => (division_operator(f, level)?, SynthesisMethod::Division),
    };
    if !verify_delta(&operator, f, level)? {
        return Err(Error::Internal(format!("synthesized operator failed verification at level {level}")));
    }
    Ok(Synthesis { operator, level, method })
}

/// Synthesizes `delta` for a stabilized chain. Level 1 is used when
/// `I_1(f^(p-1))` is the unit ideal, otherwise level `s + 1` where `s` is the
/// stabilization level.
pub fn synthesize_delta(report: &ChainReport) -> Result<Synthesis> {
    let s = report.stabilized_at.ok_or(Error::NotStabilized)?;
    let first_is_unit = report.level(1).is_some_and(|i| i.is_unit());
    let level = if first_is_unit { 1 } else { s + 1 };
    synthesize_delta_at(&report.f, level)
}

/// `w_1 = delta`, `w_k = compose(twist^(k-1)(delta), w_(k-1))`, so that
/// `w_t(1/f) = 1/f^(p^t)`.
pub fn generator_witness(delta: &Synthesis, target_power: u32) -> Result<OperatorExpr> {
    if target_power == 0 {
        return Err(Error::LevelMismatch { op: delta.level, requested: 0 });
    }
    let mut step = OperatorExpr::leaf(delta.operator.clone());
    let mut witness = step.clone();
    for _ in 1..target_power {
        step = frobenius_twist(step);
        witness = OperatorExpr::compose(step.clone(), witness)?;
    }
    Ok(witness)
}

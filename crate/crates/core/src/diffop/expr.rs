use std::fmt;
use std::sync::Arc;

use super::{level_for, DiffOperator};
use crate::context::{ensure_same, Ring};
use crate::error::{Error, Result};
use crate::frobenius::frob_decompose;
use crate::monomial::ExponentVector;
use crate::poly::Poly;

/// Operators built from normal-form leaves by composition and Frobenius twist.
#[derive(Clone, PartialEq, Eq)]
pub enum OperatorExpr {
    Leaf(DiffOperator),
    /// `outer` applied after `inner`.
    Compose(Arc<OperatorExpr>, Arc<OperatorExpr>),
    /// `twist(e)(c^p * 1 + rest) = e(c)^p`, where `rest` collects the basis
    /// monomials `x^a` with `0 <= a_i < p`, `a != 0`.
    Twist(Arc<OperatorExpr>),
}

impl OperatorExpr {
    pub fn leaf(op: DiffOperator) -> Self {
        OperatorExpr::Leaf(op)
    }

    pub fn compose(outer: OperatorExpr, inner: OperatorExpr) -> Result<Self> {
        ensure_same(outer.ring(), inner.ring())?;
        Ok(OperatorExpr::Compose(Arc::new(outer), Arc::new(inner)))
    }

    pub fn ring(&self) -> &Ring {
        match self {
            OperatorExpr::Leaf(op) => op.ring(),
            OperatorExpr::Compose(outer, _) => outer.ring(),
            OperatorExpr::Twist(inner) => inner.ring(),
        }
    }

    /// A level `N` such that the operator is `R^(p^N)`-linear.
    pub fn level(&self) -> u32 {
        match self {
            OperatorExpr::Leaf(op) => op.level(),
            OperatorExpr::Compose(a, b) => a.level().max(b.level()),
            OperatorExpr::Twist(inner) => inner.level() + 1,
        }
    }

    pub fn apply(&self, h: &Poly) -> Result<Poly> {
        ensure_same(self.ring(), h.ring())?;
        match self {
            OperatorExpr::Leaf(op) => op.apply(h),
            OperatorExpr::Compose(outer, inner) => outer.apply(&inner.apply(h)?),
            OperatorExpr::Twist(inner) => {
                let dec = frob_decompose(h, 1)?;
                let origin = ExponentVector::zero(h.ring().nvars());
                match dec.coord(&origin) {
                    None => Ok(Poly::zero(h.ring())),
                    Some(c) => inner.apply(c)?.frobenius_power(1),
                }
            }
        }
    }
}

/// Wraps `e` in a Frobenius twist, raising its level by one.
pub fn frobenius_twist(e: OperatorExpr) -> OperatorExpr {
    OperatorExpr::Twist(Arc::new(e))
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Leaf(op) => write!(f, "{op}"),
            OperatorExpr::Compose(a, b) => write!(f, "compose({a}, {b})"),
            OperatorExpr::Twist(e) => write!(f, "twist({e})"),
        }
    }
}

impl fmt::Debug for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorExpr({self})")
    }
}

/// The fraction `numerator / f^denominator_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    pub numerator: Poly,
    pub f: Poly,
    pub denominator_exp: u64,
}

impl Localized {
    /// Cancels common factors of `f` between numerator and denominator.
    pub fn normalize(&self) -> Result<Localized> {
        let mut num = self.numerator.clone();
        let mut exp = self.denominator_exp;
        if num.is_zero() {
            return Ok(Localized { numerator: num, f: self.f.clone(), denominator_exp: 0 });
        }
        while exp > 0 {
            match num.div_exact(&self.f)? {
                Some(q) => {
                    num = q;
                    exp -= 1;
                }
                None => break,
            }
        }
        Ok(Localized { numerator: num, f: self.f.clone(), denominator_exp: exp })
    }

    /// Equality of fractions by cross-multiplication.
    pub fn equals(&self, numerator: &Poly, denominator_exp: u64) -> Result<bool> {
        let lhs = self.numerator.checked_mul(&self.f.pow(denominator_exp)?)?;
        let rhs = numerator.checked_mul(&self.f.pow(self.denominator_exp)?)?;
        Ok(lhs == rhs)
    }
}

impl fmt::Display for Localized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denominator_exp {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / ({})", self.numerator, self.f),
            e => write!(f, "({}) / ({})^{e}", self.numerator, self.f),
        }
    }
}

/// Applies `e` to `g / f^m`. The fraction is rewritten as
/// `g f^(p^N - m) / f^(p^N)` with the least `N >= level(e)` such that
/// `p^N >= m`; since `e` commutes with `f^(p^N)` the result is
/// `e(g f^(p^N - m)) / f^(p^N)`.
pub fn apply_localized(e: &OperatorExpr, g: &Poly, f: &Poly, m: u64) -> Result<Localized> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    ensure_same(e.ring(), g.ring())?;
    ensure_same(g.ring(), f.ring())?;
    let p = f.ring().p();
    let n = e.level().max(level_for(p, m.saturating_sub(1)));
    let q = (p as u64).checked_pow(n).ok_or(Error::ExponentOverflow)?;
    let numerator = g.checked_mul(&f.pow(q - m)?)?;
    Ok(Localized { numerator: e.apply(&numerator)?, f: f.clone(), denominator_exp: q })
}

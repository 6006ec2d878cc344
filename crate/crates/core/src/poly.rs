//! Sparse multivariate polynomials over F_p.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::context::{ensure_same, Ring};
use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::monomial::ExponentVector;

/// A polynomial as a map from exponent vectors to nonzero coefficients.
///
/// The zero polynomial has no terms. Map iteration order is the raw
/// lexicographic order of exponent vectors; the context monomial order is
/// applied only when a sorted view is requested.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<ExponentVector, FieldScalar>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        crate::context::same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    /// The constant `c mod p`.
    pub fn constant(ring: &Ring, c: u64) -> Self {
        let c = ring.field().from_u64(c);
        Self::monomial(ring, ExponentVector::zero(ring.nvars()), c)
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, ExponentVector::unit(ring.nvars(), index), 1)
    }

    pub fn monomial(ring: &Ring, exps: ExponentVector, coeff: FieldScalar) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        let coeff = coeff % ring.p();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Sums the given terms; coefficients are reduced and repeated exponents merged.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, FieldScalar)>,
    {
        let mut out = Poly::zero(ring);
        for (e, c) in terms {
            out.add_term(e, c % ring.p());
        }
        out
    }

    pub(crate) fn from_map(ring: &Ring, terms: BTreeMap<ExponentVector, FieldScalar>) -> Self {
        debug_assert!(terms.values().all(|&c| c != 0 && c < ring.p()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term() == 1
    }

    pub fn constant_term(&self) -> FieldScalar {
        self.terms.get(&ExponentVector::zero(self.ring.nvars())).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> FieldScalar {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Terms in raw storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, FieldScalar)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    /// Terms sorted by the context monomial order, largest first.
    pub fn sorted_terms(&self) -> Vec<(ExponentVector, FieldScalar)> {
        let order = self.ring.order();
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (e.clone(), *c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, FieldScalar)> {
        let order = self.ring.order();
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(e, c)| (e, *c))
    }

    pub(crate) fn add_term(&mut self, exps: ExponentVector, coeff: FieldScalar) {
        if coeff == 0 {
            return;
        }
        let field = *self.ring.field();
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), coeff);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: FieldScalar) -> Poly {
        let field = *self.ring.field();
        let c = c % field.modulus();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), field.mul(*a, c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplies by the monomial `c * x^m`.
    pub fn mul_term(&self, m: &ExponentVector, c: FieldScalar) -> Result<Poly> {
        let field = *self.ring.field();
        if c.is_multiple_of(field.modulus()) {
            return Ok(Poly::zero(&self.ring));
        }
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            terms.insert(e.checked_add(m)?, field.mul(*a, c));
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        ensure_same(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        ensure_same(&self.ring, &other.ring)?;
        let field = *self.ring.field();
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), field.neg(*c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        ensure_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let field = *self.ring.field();
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<ExponentVector, FieldScalar> =
            HashMap::with_capacity(small.terms.len() * large.terms.len());
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let e = ea.checked_add(eb)?;
                let prod = field.mul(*ca, *cb);
                let slot = acc.entry(e).or_insert(0);
                *slot = field.add(*slot, prod);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^s)`, computed term-wise: coefficients are raised to `p^s` and
    /// exponents scaled by `p^s`. No multiplication is performed.
    pub fn frobenius_power(&self, s: u32) -> Result<Poly> {
        let q = self.ring.frobenius_modulus(s)?;
        let field = *self.ring.field();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.checked_scale(q)?, field.pow(*c, q as u64));
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    /// `self^(p^s - 1)` via `f^(p^s-1) = (f^(p^(s-1)-1))^p * f^(p-1)`.
    pub fn pow_ps_minus_one(&self, s: u32) -> Result<Poly> {
        let mut steps = PowerLadder::new(self)?;
        let mut out = steps.next_level()?;
        for _ in 1..s {
            out = steps.next_level()?;
        }
        Ok(out)
    }

    /// Applies the divided-power operator `D_b`:
    /// `D_b(x^c) = prod_i C(c_i, b_i) x^(c - b)`, zero when some `c_i < b_i`.
    pub fn apply_divided_power(&self, b: &ExponentVector) -> Poly {
        let field = *self.ring.field();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let Some(rest) = e.checked_sub(b) else { continue };
            let mut coeff = *c;
            for (ci, bi) in e.as_slice().iter().zip(b.as_slice()) {
                if *bi == 0 {
                    continue;
                }
                coeff = field.mul(coeff, field.binomial(*ci as u64, *bi as u64));
                if coeff == 0 {
                    break;
                }
            }
            if coeff != 0 {
                terms.insert(rest, coeff);
            }
        }
        Poly { ring: self.ring.clone(), terms }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        ensure_same(&self.ring, divisor.ring())?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let (lm, lc) = (lm.clone(), lc);
        let field = *self.ring.field();
        let lc_inv = field.inv(lc)?;
        let mut rem = self.clone();
        let mut quo = Poly::zero(&self.ring);
        while let Some((e, c)) = rem.leading_term() {
            let Some(m) = e.checked_sub(&lm) else {
                return Ok(None);
            };
            let factor = field.mul(c, lc_inv);
            rem = rem.checked_sub(&divisor.mul_term(&m, factor)?)?;
            quo.add_term(m, factor);
        }
        Ok(Some(quo))
    }

    /// Makes the leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => self.scale(self.ring.field().inv(lc).expect("nonzero")),
        }
    }
}

/// Produces `f^(p-1), f^(p^2-1), f^(p^3-1), ...` incrementally, reusing the
/// previous level at each step.
pub struct PowerLadder {
    f_p_minus_one: Poly,
    current: Option<Poly>,
}

impl PowerLadder {
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = f.ring().p() as u64;
        Ok(PowerLadder { f_p_minus_one: f.pow(p - 1)?, current: None })
    }

    pub fn next_level(&mut self) -> Result<Poly> {
        let next = match &self.current {
            None => self.f_p_minus_one.clone(),
            Some(prev) => prev.frobenius_power(1)?.checked_mul(&self.f_p_minus_one)?,
        };
        self.current = Some(next.clone());
        Ok(next)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if c != 1 || e.is_zero() {
                parts.push(c.to_string());
            }
            for (name, &x) in vars.iter().zip(e.as_slice()) {
                match x {
                    0 => {}
                    1 => parts.push(name.clone()),
                    _ => parts.push(format!("{name}^{x}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

// Operator impls panic on context mismatch or exponent overflow; the
// `checked_*` methods report those as errors.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(self.ring.p() - 1)
    }
}

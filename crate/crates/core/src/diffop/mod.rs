//! Differential operators `sum_b g_b * D_b` in divided powers, their action on
//! polynomials and on fractions `g / f^m`, and synthesis of operators sending
//! `1/f` to `1/f^p`.

mod expr;
mod parse;
mod synth;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub use expr::{apply_localized, frobenius_twist, Localized, OperatorExpr};
pub use parse::{parse_operator, parse_operator_expr};
pub use synth::{
    generator_witness, monomial_fast_path, synthesize_delta, synthesize_delta_at, verify_delta,
    FastPath, Synthesis, SynthesisMethod,
};

use crate::context::{ensure_same, Ring};
use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::monomial::{box_iter, ExponentVector};
use crate::poly::Poly;

/// An operator in right normal form: polynomial coefficients on the left of
/// divided powers `D_b = prod_i D_{b_i, i}`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOperator {
    ring: Ring,
    terms: BTreeMap<ExponentVector, Poly>,
}

/// Smallest `N` with `m <= p^N - 1`.
pub(crate) fn level_for(p: u32, m: u64) -> u32 {
    let mut n = 0;
    let mut q: u64 = 1;
    while q <= m {
        q = q.saturating_mul(p as u64);
        n += 1;
    }
    n
}

impl DiffOperator {
    pub fn zero(ring: &Ring) -> Self {
        DiffOperator { ring: ring.clone(), terms: BTreeMap::new() }
    }

    /// The operator `g * D_0`, i.e. multiplication by `g`.
    pub fn multiplication(g: &Poly) -> Self {
        let mut op = DiffOperator::zero(g.ring());
        op.add_term(ExponentVector::zero(g.ring().nvars()), g.clone());
        op
    }

    pub fn identity(ring: &Ring) -> Self {
        DiffOperator::multiplication(&Poly::one(ring))
    }

    /// `c * D_b`.
    pub fn divided_power(ring: &Ring, b: ExponentVector, c: FieldScalar) -> Self {
        assert_eq!(b.len(), ring.nvars(), "divided-power order length");
        let mut op = DiffOperator::zero(ring);
        op.add_term(b, Poly::constant(ring, c as u64));
        op
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (ExponentVector, Poly)>) -> Result<Self> {
        let mut op = DiffOperator::zero(ring);
        for (b, g) in terms {
            ensure_same(ring, g.ring())?;
            if b.len() != ring.nvars() {
                return Err(Error::InvalidVariables(format!(
                    "divided-power order {b:?} has {} entries, expected {}",
                    b.len(),
                    ring.nvars()
                )));
            }
            op.add_term(b, g);
        }
        Ok(op)
    }

    pub(crate) fn add_term(&mut self, b: ExponentVector, g: Poly) {
        if g.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                let sum = &*existing + &g;
                if sum.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(b, g);
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, Poly> {
        &self.terms
    }

    pub fn coefficient(&self, b: &ExponentVector) -> Option<&Poly> {
        self.terms.get(b)
    }

    /// Smallest `N` with every order component at most `p^N - 1`, i.e. the
    /// first step of the filtration `D^(N)` containing this operator.
    pub fn level(&self) -> u32 {
        let m = self.terms.keys().map(|b| b.max_component()).max().unwrap_or(0);
        level_for(self.ring.p(), m as u64)
    }

    /// `g * self`, multiplying every coefficient on the left.
    pub fn left_multiply(&self, g: &Poly) -> Result<Self> {
        ensure_same(&self.ring, g.ring())?;
        let mut out = DiffOperator::zero(&self.ring);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.checked_mul(g)?);
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    /// `sum_b g_b * D_b(h)`.
    pub fn apply(&self, h: &Poly) -> Result<Poly> {
        ensure_same(&self.ring, h.ring())?;
        let field = *self.ring.field();
        let mut acc: HashMap<ExponentVector, FieldScalar> = HashMap::new();
        for (b, g) in &self.terms {
            let dh = h.apply_divided_power(b);
            for (e1, c1) in dh.terms() {
                for (e2, c2) in g.terms() {
                    let e = e1.checked_add(e2)?;
                    let slot = acc.entry(e).or_insert(0);
                    *slot = field.add(*slot, field.mul(c1, c2));
                }
            }
        }
        Ok(Poly::from_map(&self.ring, acc.into_iter().filter(|(_, c)| *c != 0).collect()))
    }
}

pub fn apply_operator(op: &DiffOperator, h: &Poly) -> Result<Poly> {
    op.apply(h)
}

/// Builds `sum_{b in support} G_b D_b` taking the prescribed value on each
/// basis monomial of the support: `delta(x^beta) = targets[beta]` (zero when
/// absent). Solved by the unitriangular recursion
/// `G_beta = t_beta - sum_{b < beta} G_b C(beta, b) x^(beta - b)`,
/// visiting the support in order of increasing degree.
pub fn interpolate_operator(
    ring: &Ring,
    support: &[ExponentVector],
    targets: &BTreeMap<ExponentVector, Poly>,
) -> Result<DiffOperator> {
    let field = *ring.field();
    let mut order: Vec<ExponentVector> = support.to_vec();
    order.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    order.dedup();
    let mut solved: Vec<(ExponentVector, Poly)> = Vec::with_capacity(order.len());
    for beta in &order {
        let mut g = targets.get(beta).cloned().unwrap_or_else(|| Poly::zero(ring));
        ensure_same(ring, g.ring())?;
        for (b, gb) in &solved {
            if gb.is_zero() || b == beta {
                continue;
            }
            let Some(rest) = beta.checked_sub(b) else { continue };
            let mut c = 1;
            for (x, y) in beta.as_slice().iter().zip(b.as_slice()) {
                c = field.mul(c, field.binomial(*x as u64, *y as u64));
            }
            if c == 0 {
                continue;
            }
            g = g.checked_sub(&gb.mul_term(&rest, c)?)?;
        }
        solved.push((beta.clone(), g));
    }
    DiffOperator::from_terms(ring, solved)
}

/// The operator `pi_alpha` in `D^(s)` sending the basis monomial `x^alpha` to 1
/// and every other basis monomial `x^beta` (`beta_i < p^s`) to 0.
pub fn dual_projection(alpha: &ExponentVector, s: u32, ring: &Ring) -> Result<DiffOperator> {
    let q = ring.frobenius_modulus(s)?;
    if alpha.len() != ring.nvars() || !alpha.within(q - 1) {
        return Err(Error::OutOfBasisRange(alpha.as_slice().to_vec(), s));
    }
    // Coefficients vanish below alpha, so the recursion only needs the box above it.
    let support: Vec<ExponentVector> = box_iter(ring.nvars(), q - 1).filter(|b| alpha.divides(b)).collect();
    let mut targets = BTreeMap::new();
    targets.insert(alpha.clone(), Poly::one(ring));
    interpolate_operator(ring, &support, &targets)
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let order = self.ring.order();
        let mut keys: Vec<&ExponentVector> = self.terms.keys().collect();
        keys.sort_by(|a, b| order.cmp(b, a));
        for (k, b) in keys.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let g = &self.terms[b];
            let d = b.as_slice().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            if g.is_one() {
                write!(f, "D[{d}]")?;
            } else if g.num_terms() == 1 {
                write!(f, "{g} * D[{d}]")?;
            } else {
                write!(f, "({g}) * D[{d}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOperator({self})")
    }
}

//! Coordinates of a polynomial over the monomial basis of `R` as an
//! `R^(p^s)`-module, and the ideals they generate.

use std::collections::BTreeMap;

use crate::context::Ring;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::monomial::ExponentVector;
use crate::poly::Poly;

/// `g = sum_a c_a^(p^s) * x^a` over basis exponents `0 <= a_i < p^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobDecomposition {
    ring: Ring,
    level: u32,
    coords: BTreeMap<ExponentVector, Poly>,
}

impl FrobDecomposition {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Nonzero coordinates keyed by basis exponent.
    pub fn coords(&self) -> &BTreeMap<ExponentVector, Poly> {
        &self.coords
    }

    pub fn coord(&self, alpha: &ExponentVector) -> Option<&Poly> {
        self.coords.get(alpha)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `sum_a c_a^(p^s) * x^a`.
    pub fn recompose(&self) -> Result<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (alpha, c) in &self.coords {
            out = out.checked_add(&c.frobenius_power(self.level)?.mul_term(alpha, 1)?)?;
        }
        Ok(out)
    }
}

/// Buckets each term `c * x^e` of `g` by the residue `a = e mod p^s`; the
/// coordinate at `a` gains `c^(1/p^s) * x^((e - a) / p^s)`.
pub fn frob_decompose(g: &Poly, s: u32) -> Result<FrobDecomposition> {
    let ring = g.ring().clone();
    let q = ring.frobenius_modulus(s)?;
    let field = *ring.field();
    let mut coords: BTreeMap<ExponentVector, Poly> = BTreeMap::new();
    for (e, c) in g.terms() {
        let (alpha, quo) = e.split_mod(q);
        let mut root = c;
        for _ in 0..s {
            root = field.pth_root(root);
        }
        coords.entry(alpha).or_insert_with(|| Poly::zero(&ring)).add_term(quo, root);
    }
    coords.retain(|_, c| !c.is_zero());
    Ok(FrobDecomposition { ring, level: s, coords })
}

/// `I_s(g)`: the ideal generated by the coordinates of `g` at level `s`.
pub fn frobenius_root_ideal(g: &Poly, s: u32) -> Result<Ideal> {
    let dec = frob_decompose(g, s)?;
    Ideal::new(g.ring(), dec.coords.into_values())
}

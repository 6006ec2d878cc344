//! The ambient ring `F_p[x_1, ..., x_d]` with a fixed monomial order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::ExponentVector;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x_1 > x_2 > ... > x_d`.
    #[default]
    Grevlex,
    /// Pure lexicographic, `x_1 > x_2 > ... > x_d`.
    Lex,
}

impl MonomialOrder {
    pub fn as_str(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.as_slice().cmp(b.as_slice()),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.as_slice().iter().zip(b.as_slice()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(format!("unknown monomial order `{other}` (expected grevlex or lex)")),
        }
    }
}

/// Prime, variable names and monomial order. Every polynomial, ideal and
/// operator holds a shared reference to exactly one context.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(p: u32, vars: &[S], order: MonomialOrder) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        if vars.is_empty() {
            return Err(Error::InvalidVariables("no variables given".into()));
        }
        let mut seen = HashSet::new();
        let mut names = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref().trim();
            if !valid_name(v) {
                return Err(Error::InvalidVariables(format!("`{v}` is not a valid name")));
            }
            if !seen.insert(v.to_string()) {
                return Err(Error::InvalidVariables(format!("`{v}` appears twice")));
            }
            names.push(v.to_string());
        }
        Ok(Arc::new(RingContext { field, vars: names, order }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// `p^s`, or an overflow error if it does not fit an exponent.
    pub fn frobenius_modulus(&self, s: u32) -> Result<u32> {
        self.p().checked_pow(s).ok_or(Error::ExponentOverflow)
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn ensure_same(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

//! Ideals of `F_p[x_1, ..., x_d]` given by finite generator lists.

use std::fmt;
use std::sync::OnceLock;

use crate::context::{ensure_same, Ring};
use crate::error::{Error, Result};
use crate::groebner::{reduced_basis, Arith, Elem, Row};
use crate::poly::Poly;

/// Reduced Gröbner basis together with each element's expression in the
/// original generators.
#[derive(Clone, Debug)]
struct TrackedBasis {
    elems: Vec<Elem>,
}

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
    tracked: OnceLock<TrackedBasis>,
}

impl Ideal {
    /// Drops zero generators and exact duplicates, keeping first occurrences.
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Poly>) -> Result<Self> {
        let mut kept: Vec<Poly> = Vec::new();
        for g in gens {
            ensure_same(ring, g.ring())?;
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept, gb: OnceLock::new(), tracked: OnceLock::new() })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new(), tracked: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, [Poly::one(ring)]).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// The reduced Gröbner basis (monic, interreduced, sorted by
    /// leading monomial, largest first). Computed once and cached.
    pub fn groebner(&self) -> &[Poly] {
        self.gb.get_or_init(|| {
            let ar = Arith::new(&self.ring);
            let input = self
                .gens
                .iter()
                .map(|g| Elem { row: Row::from_poly(g), combo: Vec::new() })
                .collect();
            reduced_basis(ar, input).into_iter().map(|e| e.row.to_poly(&self.ring)).collect()
        })
    }

    fn tracked(&self) -> &TrackedBasis {
        self.tracked.get_or_init(|| {
            let ar = Arith::new(&self.ring);
            let n = self.gens.len();
            let input = self
                .gens
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let mut combo = vec![Poly::zero(&self.ring); n];
                    combo[i] = Poly::one(&self.ring);
                    Elem { row: Row::from_poly(g), combo }
                })
                .collect();
            TrackedBasis { elems: reduced_basis(ar, input) }
        })
    }

    /// Remainder of `h` modulo the reduced Gröbner basis; zero iff `h` is in the ideal.
    pub fn normal_form(&self, h: &Poly) -> Result<Poly> {
        ensure_same(&self.ring, h.ring())?;
        let ar = Arith::new(&self.ring);
        let basis: Vec<Elem> = self
            .groebner()
            .iter()
            .map(|g| Elem { row: Row::from_poly(g), combo: Vec::new() })
            .collect();
        let r = ar.reduce(Elem { row: Row::from_poly(h), combo: Vec::new() }, &basis, None);
        Ok(r.row.to_poly(&self.ring))
    }

    pub fn contains(&self, h: &Poly) -> Result<bool> {
        Ok(self.normal_form(h)?.is_zero())
    }

    /// Cofactors `r_j` with `h = sum_j r_j * gens[j]`. The recombination is
    /// checked before returning.
    pub fn divide_with_cofactors(&self, h: &Poly) -> Result<Vec<Poly>> {
        ensure_same(&self.ring, h.ring())?;
        let ar = Arith::new(&self.ring);
        let tracked = self.tracked();
        let n = self.gens.len();
        let start = Elem { row: Row::from_poly(h), combo: vec![Poly::zero(&self.ring); n] };
        // Invariant during reduction: row = h + sum_j combo[j] * gens[j].
        let r = ar.reduce(start, &tracked.elems, None);
        if !r.row.is_zero() {
            return Err(Error::NotMember);
        }
        let cofactors: Vec<Poly> = r.combo.iter().map(|c| -c).collect();
        let mut check = Poly::zero(&self.ring);
        for (c, g) in cofactors.iter().zip(&self.gens) {
            check = check.checked_add(&c.checked_mul(g)?)?;
        }
        if &check != h {
            return Err(Error::Internal("cofactor recombination failed".into()));
        }
        Ok(cofactors)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.groebner(), [g] if g.is_one())
    }

    /// `self ⊆ other`, by reducing each generator of `self` modulo `other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        ensure_same(&self.ring, &other.ring)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via identical reduced Gröbner bases.
    pub fn ideal_eq(&self, other: &Ideal) -> Result<bool> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(self.groebner() == other.groebner())
    }

    /// Generated by all pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        ensure_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^[p^s]`, generated by `g^(p^s)` for each generator `g`.
    pub fn bracket_power(&self, s: u32) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.frobenius_power(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Largest total degree among the generators (0 for the zero ideal).
    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ideal_eq(other).unwrap_or(false)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gb = self.groebner();
        if gb.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

pub fn reduced_groebner(ideal: &Ideal) -> &[Poly] {
    ideal.groebner()
}

pub fn normal_form(h: &Poly, ideal: &Ideal) -> Result<Poly> {
    ideal.normal_form(h)
}

pub fn divide_with_cofactors(h: &Poly, ideal: &Ideal) -> Result<Vec<Poly>> {
    ideal.divide_with_cofactors(h)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.ideal_eq(b)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.product(b)
}

pub fn bracket_power(ideal: &Ideal, s: u32) -> Result<Ideal> {
    ideal.bracket_power(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{MonomialOrder, RingContext};
    use crate::parse::parse_poly;

    fn ring(p: u32, vars: &[&str]) -> Ring {
        RingContext::new(p, vars, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap())).unwrap()
    }

    fn gb_strings(i: &Ideal) -> Vec<String> {
        i.groebner().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn groebner_examples() {
        let r2 = ring(2, &["x", "y"]);
        assert_eq!(gb_strings(&ideal(&r2, &["x", "x+y"])), ["x", "y"]);
        let r3 = ring(3, &["x", "y"]);
        assert_eq!(gb_strings(&ideal(&r3, &["x^2", "x*y"])), ["x^2", "x*y"]);
        assert!(ideal(&r3, &[]).groebner().is_empty());
        assert!(ideal(&r3, &["0", "x - x"]).is_zero_ideal());
    }

    #[test]
    fn groebner_needs_new_elements() {
        // Classic example: (x^2 - y, x*y - 1) over F_5 in lex gives y^3 - 1.
        let r = RingContext::new(5, &["x", "y"], MonomialOrder::Lex).unwrap();
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        assert_eq!(gb_strings(&i), ["x + 4*y^2", "y^3 + 4"]);
    }

    #[test]
    fn normal_form_examples() {
        let r2 = ring(2, &["x", "y"]);
        assert!(normal_form(&parse_poly("y^2", &r2).unwrap(), &ideal(&r2, &["x", "y^2"])).unwrap().is_zero());
        assert_eq!(
            normal_form(&parse_poly("y", &r2).unwrap(), &ideal(&r2, &["x"])).unwrap(),
            parse_poly("y", &r2).unwrap()
        );
        assert!(normal_form(&parse_poly("x^2+x*y", &r2).unwrap(), &ideal(&r2, &["x"])).unwrap().is_zero());
    }

    #[test]
    fn cofactor_examples() {
        let r2 = ring(2, &["x", "y"]);
        let i = ideal(&r2, &["x^2", "y^2"]);
        let h = parse_poly("x^2*y^2", &r2).unwrap();
        let cof = divide_with_cofactors(&h, &i).unwrap();
        assert_eq!(&(&cof[0] * &i.gens()[0]) + &(&cof[1] * &i.gens()[1]), h);

        let h = parse_poly("x^2+x*y", &r2).unwrap();
        let cof = divide_with_cofactors(&h, &ideal(&r2, &["x"])).unwrap();
        assert_eq!(cof, vec![parse_poly("x+y", &r2).unwrap()]);

        let h = parse_poly("y", &r2).unwrap();
        assert_eq!(divide_with_cofactors(&h, &ideal(&r2, &["x"])), Err(Error::NotMember));
    }

    #[test]
    fn cofactors_through_new_basis_elements() {
        let r = ring(7, &["x", "y", "z"]);
        let i = ideal(&r, &["x*y - z", "y*z - x", "x^2 - y"]);
        let h = parse_poly("(x*y - z)*(x+1) + (y*z - x)*y^2 + 3*(x^2-y)*z", &r).unwrap();
        let cof = divide_with_cofactors(&h, &i).unwrap();
        let mut back = Poly::zero(&r);
        for (c, g) in cof.iter().zip(i.gens()) {
            back = &back + &(c * g);
        }
        assert_eq!(back, h);
    }

    #[test]
    fn equality_examples() {
        let r = ring(3, &["x", "y"]);
        assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["x+y", "y"])).unwrap());
        assert!(!ideal_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])).unwrap());
        assert!(ideal_equal(&ideal(&r, &["1"]), &ideal(&r, &["x", "x+1"])).unwrap());
        let other = ring(5, &["x", "y"]);
        assert_eq!(ideal_equal(&ideal(&r, &["x"]), &ideal(&other, &["x"])), Err(Error::ContextMismatch));
    }

    #[test]
    fn product_examples() {
        let r = ring(3, &["x", "y"]);
        assert_eq!(ideal_product(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap(), ideal(&r, &["x*y"]));
        assert_eq!(ideal_product(&ideal(&r, &["x", "y"]), &ideal(&r, &["1"])).unwrap(), ideal(&r, &["x", "y"]));
        assert_eq!(
            ideal_product(&ideal(&r, &["x", "y"]), &ideal(&r, &["x", "y"])).unwrap(),
            ideal(&r, &["x^2", "x*y", "y^2"])
        );
    }

    #[test]
    fn bracket_power_examples() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(gb_strings(&bracket_power(&ideal(&r, &["x", "y"]), 2).unwrap()), ["x^4", "y^4"]);
        assert_eq!(bracket_power(&ideal(&r, &["x+y"]), 1).unwrap().gens()[0].to_string(), "x^2 + y^2");
        assert!(bracket_power(&ideal(&r, &["1"]), 3).unwrap().is_unit());
    }
}

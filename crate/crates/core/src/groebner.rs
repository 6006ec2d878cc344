//! Buchberger's algorithm on sorted term vectors, optionally tracking how each
//! basis element is written in terms of the input generators.

use std::cmp::Ordering;

use crate::context::{MonomialOrder, Ring};
use crate::field::{FieldScalar, PrimeField};
use crate::monomial::ExponentVector;
use crate::poly::Poly;

/// Terms sorted by the monomial order, largest first.
#[derive(Clone, Debug, Default)]
pub(crate) struct Row(pub Vec<(ExponentVector, FieldScalar)>);

impl Row {
    pub fn from_poly(p: &Poly) -> Row {
        Row(p.sorted_terms())
    }

    pub fn to_poly(&self, ring: &Ring) -> Poly {
        Poly::from_map(ring, self.0.iter().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lm(&self) -> &ExponentVector {
        &self.0[0].0
    }

    pub fn lc(&self) -> FieldScalar {
        self.0[0].1
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Arith {
    pub field: PrimeField,
    pub order: MonomialOrder,
}

impl Arith {
    pub fn new(ring: &Ring) -> Self {
        Arith { field: *ring.field(), order: ring.order() }
    }

    pub fn scale(&self, r: &mut Row, c: FieldScalar) {
        for t in &mut r.0 {
            t.1 = self.field.mul(t.1, c);
        }
    }

    /// `a - c * x^m * b`.
    pub fn sub_mul(&self, a: &Row, c: FieldScalar, m: &ExponentVector, b: &Row) -> Row {
        let neg = self.field.neg(c);
        let mut out = Vec::with_capacity(a.0.len() + b.0.len());
        let mut i = 0;
        let mut shifted = b.0.iter().map(|(e, x)| {
            (e.checked_add(m).expect("exponent overflow in reduction"), self.field.mul(*x, neg))
        });
        let mut next_b = shifted.next();
        while i < a.0.len() || next_b.is_some() {
            match (a.0.get(i), &next_b) {
                (Some(ta), Some(tb)) => match self.order.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => {
                        out.push(ta.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = shifted.next();
                    }
                    Ordering::Equal => {
                        let s = self.field.add(ta.1, tb.1);
                        if s != 0 {
                            out.push((ta.0.clone(), s));
                        }
                        i += 1;
                        next_b = shifted.next();
                    }
                },
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = shifted.next();
                }
                (None, None) => unreachable!(),
            }
        }
        Row(out)
    }
}

/// A basis element with its expression in the original generators
/// (`row = sum_j combo[j] * gens[j]`); `combo` is empty when not tracking.
#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub row: Row,
    pub combo: Vec<Poly>,
}

fn combo_sub_mul(combo: &mut [Poly], c: FieldScalar, m: &ExponentVector, other: &[Poly]) {
    for (x, y) in combo.iter_mut().zip(other) {
        if y.is_zero() {
            continue;
        }
        let neg = y.ring().field().neg(c);
        *x = x.checked_add(&y.mul_term(m, neg).expect("exponent overflow")).expect("same ring");
    }
}

fn combo_scale(combo: &mut [Poly], c: FieldScalar) {
    for x in combo.iter_mut() {
        *x = x.scale(c);
    }
}

impl Arith {
    fn make_monic(&self, e: &mut Elem) {
        let lc = e.row.lc();
        if lc != 1 {
            let inv = self.field.inv(lc).expect("nonzero leading coefficient");
            self.scale(&mut e.row, inv);
            combo_scale(&mut e.combo, inv);
        }
    }

    /// Fully reduces `e` modulo the monic elements of `basis`, skipping index `skip`.
    pub fn reduce(&self, mut e: Elem, basis: &[Elem], skip: Option<usize>) -> Elem {
        let mut rem = Vec::new();
        while !e.row.is_zero() {
            let lm = e.row.lm().clone();
            let divisor = basis.iter().enumerate().find_map(|(k, g)| {
                if Some(k) == skip || g.row.is_zero() {
                    return None;
                }
                lm.checked_sub(g.row.lm()).map(|m| (k, m))
            });
            match divisor {
                Some((k, m)) => {
                    let c = e.row.lc();
                    e.row = self.sub_mul(&e.row, c, &m, &basis[k].row);
                    combo_sub_mul(&mut e.combo, c, &m, &basis[k].combo);
                }
                None => {
                    let lead = e.row.0.remove(0);
                    rem.push(lead);
                }
            }
        }
        e.row = Row(rem);
        e
    }

    fn s_poly(&self, a: &Elem, b: &Elem) -> Elem {
        let lcm = a.row.lm().lcm(b.row.lm());
        let ma = lcm.checked_sub(a.row.lm()).unwrap();
        let mb = lcm.checked_sub(b.row.lm()).unwrap();
        // Both inputs are monic, so S = x^ma * a - x^mb * b.
        let zero = Row::default();
        let left = self.sub_mul(&zero, self.field.neg(1), &ma, &a.row);
        let row = self.sub_mul(&left, 1, &mb, &b.row);
        let mut combo: Vec<Poly> = a.combo.iter().map(|c| c.mul_term(&ma, 1).unwrap()).collect();
        combo_sub_mul(&mut combo, 1, &mb, &b.combo);
        Elem { row, combo }
    }
}

fn pair_key(basis: &[Elem], i: usize, j: usize) -> ExponentVector {
    basis[i].row.lm().lcm(basis[j].row.lm())
}

/// Computes the reduced Gröbner basis of the given elements. Output elements
/// are monic, interreduced, and sorted by decreasing leading monomial.
pub(crate) fn reduced_basis(ar: Arith, input: Vec<Elem>) -> Vec<Elem> {
    // Linear elimination first: distinct leading monomials, no zero rows.
    let mut basis: Vec<Elem> = Vec::new();
    for e in input {
        let mut e = linear_reduce(ar, e, &basis);
        if e.row.is_zero() {
            continue;
        }
        ar.make_monic(&mut e);
        basis.push(e);
    }

    let n = basis.len();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    while !pending.is_empty() {
        // Normal selection: smallest lcm by degree, then by the term order.
        let (pick, _) = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = pair_key(&basis, a.0, a.1);
                let lb = pair_key(&basis, b.0, b.1);
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| ar.order.cmp(&la, &lb))
                    .then_with(|| (a.1, a.0).cmp(&(b.1, b.0)))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(pick);

        let (lmi, lmj) = (basis[i].row.lm(), basis[j].row.lm());
        let lcm = lmi.lcm(lmj);
        let coprime = lmi.is_coprime(lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].row.lm().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if coprime || chain {
            continue;
        }

        let s = ar.s_poly(&basis[i], &basis[j]);
        let mut r = ar.reduce(s, &basis, None);
        if r.row.is_zero() {
            continue;
        }
        ar.make_monic(&mut r);
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pending.push((i, k));
        }
    }

    // Minimalize.
    let lms: Vec<ExponentVector> = basis.iter().map(|e| e.row.lm().clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
        .collect();
    let mut minimal: Vec<Elem> =
        basis.into_iter().zip(keep).filter_map(|(e, k)| k.then_some(e)).collect();

    // Interreduce tails.
    for i in 0..minimal.len() {
        let e = minimal[i].clone();
        let lead = e.row.0[0].clone();
        let tail = Elem { row: Row(e.row.0[1..].to_vec()), combo: e.combo.clone() };
        // Reduce only the tail; the combo is carried along on the whole element.
        let reduced = ar.reduce(tail, &minimal, Some(i));
        let mut terms = vec![lead];
        terms.extend(reduced.row.0);
        minimal[i] = Elem { row: Row(terms), combo: reduced.combo };
    }
    minimal.sort_by(|a, b| ar.order.cmp(b.row.lm(), a.row.lm()));
    minimal
}

/// Eliminates every term of `e` whose monomial is a leading monomial of `basis`.
fn linear_reduce(ar: Arith, mut e: Elem, basis: &[Elem]) -> Elem {
    let mut idx = 0;
    while idx < e.row.0.len() {
        let (mono, c) = e.row.0[idx].clone();
        if let Some(g) = basis.iter().find(|g| *g.row.lm() == mono) {
            let zero = ExponentVector::zero(mono.len());
            e.row = ar.sub_mul(&e.row, c, &zero, &g.row);
            combo_sub_mul(&mut e.combo, c, &zero, &g.combo);
            // the term at idx is gone; everything before idx is untouched
        } else {
            idx += 1;
        }
    }
    e
}

mod common;

use frobgen_core::oracle::{oracle_ds_image, oracle_pow, oracle_recompose};
use frobgen_core::*;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = (u32, usize, Vec<(Vec<u32>, u32)>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1usize..=3).prop_flat_map(|(p, d)| {
        let term = (prop::collection::vec(0u32..4, d), 1..p);
        (Just(p), Just(d), prop::collection::vec(term, 0..5))
    })
}

fn build(p: u32, d: usize, terms: Vec<(Vec<u32>, u32)>) -> Poly {
    let ring = common::ring(p, d);
    Poly::from_terms(&ring, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c)).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn display_round_trips((p, d, terms) in poly_strategy()) {
        let f = build(p, d, terms);
        let again = parse_poly(&f.to_string(), f.ring()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn frobenius_power_is_repeated_product((p, d, terms) in poly_strategy()) {
        let f = build(p, d, terms);
        let mut prod = Poly::one(f.ring());
        for _ in 0..p {
            prod = prod.checked_mul(&f).unwrap();
        }
        prop_assert_eq!(f.frobenius_power(1).unwrap(), prod);
    }

    #[test]
    fn ladder_matches_frobenius((p, d, terms) in poly_strategy(), s in 1u32..=2) {
        let f = build(p, d, terms);
        prop_assume!((p as u64).pow(s) <= 25 && !f.is_zero());
        let lhs = f.pow_ps_minus_one(s).unwrap().checked_mul(&f).unwrap();
        prop_assert_eq!(lhs, f.frobenius_power(s).unwrap());
    }

    #[test]
    fn groebner_is_canonical((p, d, a) in poly_strategy(), b in prop::collection::vec((prop::collection::vec(0u32..3, 3), 1u32..2), 1..4)) {
        let f = build(p, d, a);
        let g = build(p, d, b.into_iter().map(|(e, c)| (e[..d].to_vec(), c)).collect());
        let ring = f.ring().clone();
        let fwd = Ideal::new(&ring, [f.clone(), g.clone(), f.checked_mul(&g).unwrap()]).unwrap();
        let rev = Ideal::new(&ring, [g.clone(), f.clone()]).unwrap();
        prop_assert_eq!(fwd.groebner(), rev.groebner());
        let again = Ideal::new(&ring, fwd.groebner().to_vec()).unwrap();
        prop_assert_eq!(again.groebner(), fwd.groebner());
        for h in fwd.gens() {
            prop_assert!(fwd.normal_form(h).unwrap().is_zero());
        }
        let h = f.checked_mul(&f).unwrap().checked_add(&g).unwrap();
        let cof = fwd.divide_with_cofactors(&h).unwrap();
        let mut sum = Poly::zero(&ring);
        for (q, gen) in cof.iter().zip(fwd.gens()) {
            sum = sum.checked_add(&q.checked_mul(gen).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, h);
    }

    #[test]
    fn decomposition_round_trips((p, d, terms) in poly_strategy(), s in 1u32..=2) {
        let g = build(p, d, terms);
        let dec = frob_decompose(&g, s).unwrap();
        prop_assert_eq!(dec.recompose().unwrap(), g.clone());
        prop_assert_eq!(oracle_recompose(&dec).unwrap(), g);
    }
}

#[test]
fn lemmas_on_random_suite() {
    for inst in common::suite(11, 45) {
        let (f, other, s) = (&inst.f, &inst.other, inst.s);
        let i_s = frobenius_root_ideal(f, s).unwrap();
        let i_next = frobenius_root_ideal(&f.frobenius_power(1).unwrap(), s + 1).unwrap();
        assert!(i_s.ideal_eq(&i_next).unwrap(), "I_s(f) = I_s+1(f^p) for {f}");

        let prod = frobenius_root_ideal(&f.checked_mul(other).unwrap(), s).unwrap();
        let rhs = i_s.product(&frobenius_root_ideal(other, s).unwrap()).unwrap();
        assert!(prod.is_subset_of(&rhs).unwrap(), "product containment for {f}, {other}");

        let image = oracle_ds_image(f, s, 1 << 16).unwrap();
        assert!(image.ideal_eq(&i_s.bracket_power(s).unwrap()).unwrap(), "operator image for {f}");

        let q = (inst.ring.p() as u64).pow(s);
        assert_eq!(oracle_pow(f, q - 1).unwrap(), f.pow_ps_minus_one(s).unwrap());
    }
}

#[test]
fn chain_is_descending_and_stabilizes_below_cap() {
    for inst in common::suite(12, 60) {
        let report = compute_chain(&inst.f, LevelCap::Auto).unwrap();
        let s = stabilization_level(&report).unwrap();
        assert!(s < report.cap);
        assert!(report.degrees_ok);
        for pair in report.levels.windows(2) {
            assert!(pair[1].ideal.is_subset_of(&pair[0].ideal).unwrap());
        }
        let p = inst.ring.p() as u64;
        // One level past the first equality agrees as well.
        if p.pow(s + 2) <= 27 {
            let far = frobenius_root_ideal(&inst.f.pow_ps_minus_one(s + 2).unwrap(), s + 2).unwrap();
            assert!(far.ideal_eq(report.level(s).unwrap()).unwrap(), "chain moved after stabilizing for {}", inst.f);
        }
    }
}

#[test]
fn synthesized_operators_are_sound_and_minimal() {
    for inst in common::suite(13, 60) {
        let report = compute_chain(&inst.f, LevelCap::Auto).unwrap();
        let delta = synthesize_delta(&report).unwrap();
        assert!(verify_delta(&delta.operator, &inst.f, delta.level).unwrap());
        if delta.method == SynthesisMethod::FastPath {
            assert!(report.level(1).unwrap().is_unit());
        }
        // Extension: no operator exists one level lower.
        if delta.level > 1 {
            assert_eq!(synthesize_delta_at(&inst.f, delta.level - 1).unwrap_err(), Error::NotMember);
        }
        for t in 1..=2 {
            let w = generator_witness(&delta, t).unwrap();
            let out = apply_localized(&w, &Poly::one(&inst.ring), &inst.f, 1).unwrap();
            let p = inst.ring.p() as u64;
            assert!(out.equals(&Poly::one(&inst.ring), p.pow(t)).unwrap(), "witness {w} for {}", inst.f);
        }
    }
}

#[test]
fn twist_acts_through_frobenius() {
    let mut rng = common::rng(14);
    for inst in common::suite(15, 30) {
        let report = compute_chain(&inst.f, LevelCap::Auto).unwrap();
        let delta = synthesize_delta(&report).unwrap();
        let e = OperatorExpr::leaf(delta.operator.clone());
        let t = frobenius_twist(e.clone());
        let h = common::random_poly(&mut rng, &inst.ring, 3, 3);
        let lifted = t.apply(&h.frobenius_power(1).unwrap()).unwrap();
        assert_eq!(lifted, e.apply(&h).unwrap().frobenius_power(1).unwrap());
        let mut off = vec![0u32; inst.ring.nvars()];
        off[0] = 1;
        let x = Poly::monomial(&inst.ring, ExponentVector::new(off), 1);
        let shifted = h.frobenius_power(1).unwrap().checked_mul(&x).unwrap();
        assert!(t.apply(&shifted).unwrap().is_zero());
    }
}

#[test]
fn bracket_power_cancels() {
    use rand::Rng;
    let mut rng = common::rng(16);
    for i in 0..40 {
        let p = common::PRIMES[i % 3];
        let ring = common::ring(p, rng.gen_range(1..=2));
        let j_gens: Vec<Poly> = (0..rng.gen_range(1..=2)).map(|_| common::random_nonconstant(&mut rng, &ring, 2, 2)).collect();
        let j = Ideal::new(&ring, j_gens.clone()).unwrap();
        let i_gens = if i % 2 == 0 {
            let c = common::random_poly(&mut rng, &ring, 1, 2);
            vec![j_gens[0].checked_mul(&c).unwrap()]
        } else {
            vec![common::random_nonconstant(&mut rng, &ring, 2, 2)]
        };
        let small = Ideal::new(&ring, i_gens).unwrap();
        let inside = small.is_subset_of(&j).unwrap();
        for s in 1..=2 {
            let bracket = small.bracket_power(s).unwrap().is_subset_of(&j.bracket_power(s).unwrap()).unwrap();
            assert_eq!(inside, bracket, "I = {small}, J = {j}, s = {s}");
        }
    }
}

#[test]
fn operator_text_round_trips() {
    for inst in common::suite(17, 30) {
        let report = compute_chain(&inst.f, LevelCap::Auto).unwrap();
        let delta = synthesize_delta(&report).unwrap();
        let text = delta.operator.to_string();
        assert_eq!(parse_operator(&text, &inst.ring).unwrap(), delta.operator);
        let w = generator_witness(&delta, 3).unwrap();
        assert_eq!(parse_operator_expr(&w.to_string(), &inst.ring).unwrap(), w);
    }
}

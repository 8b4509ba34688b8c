//! Randomized algebraic invariants: ring axioms, order axioms, parser
//! round-trips, and Gröbner-engine properties against the naive oracle.

mod common;

use std::cmp::Ordering;

use proptest::prelude::*;

use aci_core::generate::SplitMix64;
use aci_core::hilbert::monomials_of_degree;
use aci_core::monomial::{Monomial, MonomialOrder};
use aci_core::poly::Polynomial;
use aci_core::scalar::Scalar as _;
use aci_core::{Coeff, Poly, RingContext};

use common::{naive_groebner, naive_reduce, random_form, random_small_ideal};

fn arb_monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::from_exponents)
}

fn arb_poly(n_vars: usize) -> impl Strategy<Value = Poly> {
    let ctx = RingContext::with_arity(n_vars).unwrap();
    prop::collection::vec((arb_monomial(n_vars, 3), -4i64..=4), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            &ctx,
            terms
                .into_iter()
                .map(|(m, c)| (Coeff::from_int(c), m))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold_exactly(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let zero = Polynomial::zero(a.ctx());
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&(&a - &a), &zero);
        prop_assert_eq!(&a * &zero, zero);
    }

    #[test]
    fn canonical_form_is_strictly_descending(a in arb_poly(3), b in arb_poly(3)) {
        let sum = &a + &b;
        let ord = MonomialOrder::GrevLex;
        for pair in sum.terms().windows(2) {
            prop_assert_eq!(ord.compare(&pair[0].1, &pair[1].1), Ordering::Greater);
        }
        for (c, _) in sum.terms() {
            prop_assert!(!num::traits::Zero::is_zero(c));
        }
    }

    #[test]
    fn order_axioms(
        a in arb_monomial(3, 4),
        b in arb_monomial(3, 4),
        c in arb_monomial(3, 4),
        which in 0usize..3,
    ) {
        let ord = [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Block(1)][which];
        // Totality and antisymmetry.
        let ab = ord.compare(&a, &b);
        prop_assert_eq!(ab.reverse(), ord.compare(&b, &a));
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        // Transitivity.
        if ab != Ordering::Greater && ord.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(ord.compare(&a, &c), Ordering::Greater);
        }
        // Multiplicativity.
        prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), ab);
        // One is the least monomial.
        let one = Monomial::one(3);
        if !a.is_one() {
            prop_assert_eq!(ord.compare(&a, &one), Ordering::Greater);
        }
    }

    #[test]
    fn homogeneous_products_grade_additively(d1 in 1u32..3, d2 in 1u32..3, seed in any::<u64>()) {
        let ctx = RingContext::with_arity(3).unwrap();
        let mut rng = SplitMix64::new(seed);
        let a = random_form(&mut rng, &ctx, d1, 4);
        let b = random_form(&mut rng, &ctx, d2, 4);
        if !a.is_zero() && !b.is_zero() {
            let prod = &a * &b;
            prop_assert_eq!(prod.degree_info(), (Some(d1 + d2), true));
        }
    }

    #[test]
    fn printing_then_parsing_is_identity(p in arb_poly(3)) {
        let printed = p.to_string();
        let reparsed: Poly = Polynomial::parse(&printed, p.ctx()).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

#[test]
fn engine_matches_naive_oracle_on_seeded_ideals() {
    let ctx = RingContext::with_arity(2).unwrap();
    let ctx3 = RingContext::with_arity(3).unwrap();
    for seed in 0..40u64 {
        let mut rng = SplitMix64::new(seed);
        let (c, n_gens) = if seed % 2 == 0 { (&ctx, 2) } else { (&ctx3, 2) };
        let ideal = random_small_ideal(&mut rng, c, n_gens);
        let engine = ideal.gb().elements().to_vec();
        let oracle = naive_groebner(ideal.generators(), MonomialOrder::GrevLex);
        assert_eq!(engine, oracle, "seed {seed}");
    }
}

#[test]
fn every_s_polynomial_of_the_basis_reduces_to_zero() {
    let ctx = RingContext::with_arity(3).unwrap();
    for seed in 0..20u64 {
        let mut rng = SplitMix64::new(1000 + seed);
        let ideal = random_small_ideal(&mut rng, &ctx, 3);
        let gb = ideal.gb();
        let elements = gb.elements();
        for i in 0..elements.len() {
            for j in (i + 1)..elements.len() {
                let (_, mi) = elements[i].leading().unwrap();
                let (_, mj) = elements[j].leading().unwrap();
                let lcm = mi.lcm(mj);
                let si = elements[i].mul_monomial(&lcm.quotient(mi).unwrap());
                let sj = elements[j].mul_monomial(&lcm.quotient(mj).unwrap());
                let s = &si - &sj;
                assert!(gb.normal_form(&s).is_zero(), "seed {seed}, pair ({i},{j})");
            }
        }
    }
}

#[test]
fn normal_form_is_independent_of_reduction_strategy() {
    let ctx = RingContext::with_arity(3).unwrap();
    for seed in 0..15u64 {
        let mut rng = SplitMix64::new(2000 + seed);
        let ideal = random_small_ideal(&mut rng, &ctx, 2);
        let gb = ideal.gb();
        let p = random_form(&mut rng, &ctx, 3, 4);
        let engine = gb.normal_form(&p);
        let naive = naive_reduce(&p, gb.elements(), MonomialOrder::GrevLex);
        assert_eq!(engine, naive, "seed {seed}");
    }
}

#[test]
fn colon_adjunction_on_random_ideals() {
    let ctx = RingContext::with_arity(2).unwrap();
    for seed in 0..12u64 {
        let mut rng = SplitMix64::new(3000 + seed);
        let a = random_small_ideal(&mut rng, &ctx, 2);
        let b = random_small_ideal(&mut rng, &ctx, 1);
        let quotient = a.colon(&b);
        for d in 0..5u32 {
            for m in monomials_of_degree(2, d) {
                let p = Polynomial::monomial(&ctx, Coeff::from_int(1), m);
                let via_colon = quotient.contains(&p);
                let via_products = b.generators().iter().all(|g| a.contains(&(&p * g)));
                assert_eq!(via_colon, via_products, "seed {seed}, monomial {p}");
            }
        }
    }
}

#[test]
fn intersection_membership_on_random_ideals() {
    let ctx = RingContext::with_arity(2).unwrap();
    for seed in 0..12u64 {
        let mut rng = SplitMix64::new(4000 + seed);
        let a = random_small_ideal(&mut rng, &ctx, 2);
        let b = random_small_ideal(&mut rng, &ctx, 2);
        let meet = a.intersect(&b);
        for d in 0..5u32 {
            for m in monomials_of_degree(2, d) {
                let p = Polynomial::monomial(&ctx, Coeff::from_int(1), m);
                assert_eq!(
                    meet.contains(&p),
                    a.contains(&p) && b.contains(&p),
                    "seed {seed}, monomial {p}"
                );
            }
        }
    }
}

#[test]
fn generated_regular_sequences_have_complementary_dimension() {
    use aci_core::generate::random_regular_sequence;
    let ctx = RingContext::with_arity(3).unwrap();
    for (height, degrees) in [(1usize, vec![2u32]), (2, vec![2, 2]), (3, vec![1, 2, 2])] {
        for seed in 0..3u64 {
            let f = random_regular_sequence(&ctx, height, &degrees, 7 * seed + 1).unwrap();
            let ideal = aci_core::Ideal::new(f).unwrap();
            assert_eq!(ideal.dimension().unwrap() as usize, 3 - height);
        }
    }
}

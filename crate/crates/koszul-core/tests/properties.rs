//! Property suites: ring axioms on random polynomials, monomial order
//! axioms on 1000 random triples, parser round trips, and normal-form
//! contracts on random submodule members.

use proptest::prelude::*;

use koszul_core::groebner::{buchberger, FreeElement, ModuleOrder};
use koszul_core::polyring::{
    Coeff, CoefficientField, Monomial, MonomialOrder, Polynomial, PolynomialRing,
};

fn qq_ring() -> PolynomialRing {
    PolynomialRing::new(
        CoefficientField::rationals(),
        vec!["x".into(), "y".into(), "z".into()],
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn gf5_ring() -> PolynomialRing {
    PolynomialRing::new(
        CoefficientField::prime(5).unwrap(),
        vec!["x".into(), "y".into(), "z".into()],
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

prop_compose! {
    fn arb_monomial()(exps in proptest::collection::vec(0u32..4, 3)) -> Monomial {
        Monomial::new(exps)
    }
}

fn arb_poly(ring: PolynomialRing) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_monomial(), -6i64..=6), 0..5).prop_map(move |terms| {
        let field = ring.field().clone();
        Polynomial::from_terms(
            ring.clone(),
            terms
                .into_iter()
                .map(|(m, c)| (m, field.from_i64(c)))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(
        f in arb_poly(qq_ring()),
        g in arb_poly(qq_ring()),
        h in arb_poly(qq_ring()),
    ) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(
        f in arb_poly(gf5_ring()),
        g in arb_poly(gf5_ring()),
        h in arb_poly(gf5_ring()),
    ) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn leading_terms_multiply(
        f in arb_poly(qq_ring()),
        g in arb_poly(qq_ring()),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = f.mul(&g);
        let (fm, fc) = f.leading_term().unwrap();
        let (gm, gc) = g.leading_term().unwrap();
        let (pm, pc) = prod.leading_term().unwrap();
        prop_assert_eq!(pm, &fm.mul(gm));
        let field = f.ring().field();
        prop_assert_eq!(pc, &field.mul(fc, gc));
    }

    #[test]
    fn freshman_dream_in_characteristic_two(
        f in arb_poly(PolynomialRing::new(
            CoefficientField::prime(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        ).unwrap()),
        g in arb_poly(PolynomialRing::new(
            CoefficientField::prime(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        ).unwrap()),
    ) {
        let sum_sq = f.add(&g).pow(2);
        let sq_sum = f.pow(2).add(&g.pow(2));
        prop_assert_eq!(sum_sq, sq_sum);
    }

    #[test]
    fn format_parse_round_trip(f in arb_poly(qq_ring())) {
        let r = qq_ring();
        prop_assume!(!f.is_zero());
        let text = f.to_string();
        let back = r.parse_poly(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn format_parse_round_trip_gf5(f in arb_poly(gf5_ring())) {
        let r = gf5_ring();
        prop_assume!(!f.is_zero());
        let back = r.parse_poly(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

/// Order axioms on 1000 pseudo-random monomial triples: compatibility with
/// multiplication, minimality of 1, antisymmetry and transitivity.
#[test]
fn monomial_order_axioms_on_1000_triples() {
    use std::cmp::Ordering;
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut next = move |bound: u32| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % bound as u64) as u32
    };
    let one = Monomial::one(3);
    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        for _ in 0..1000 {
            let a = Monomial::new((0..3).map(|_| next(6)).collect());
            let b = Monomial::new((0..3).map(|_| next(6)).collect());
            let c = Monomial::new((0..3).map(|_| next(6)).collect());

            // antisymmetry
            assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            // multiplicativity: a < b implies ac < bc
            assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
            // 1 is minimal
            if !a.is_one() {
                assert_eq!(ord.cmp(&one, &a), Ordering::Less);
            }
            // transitivity
            if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
            }
            // totality: equal comparison implies equal exponents
            if ord.cmp(&a, &b) == Ordering::Equal {
                assert_eq!(a, b);
            }
        }
    }
}

/// Explicit combinations reduce to zero and normal forms are idempotent.
#[test]
fn normal_form_contracts_on_random_members() {
    let ring = gf5_ring();
    let order = ModuleOrder::term_over_position(ring.order());
    let mut state = 0x0fed_cba9_8765_4321u64;
    let mut next = move |bound: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % bound
    };
    let mut rand_poly = |r: &PolynomialRing| {
        let mut acc = r.zero();
        for _ in 0..2 {
            let c = r.field().from_i64(next(5) as i64);
            let m = Monomial::new(vec![next(3) as u32, next(3) as u32, next(3) as u32]);
            acc = acc.add(&Polynomial::from_terms(r.clone(), vec![(m, c)]));
        }
        acc
    };
    for _ in 0..25 {
        let gens: Vec<FreeElement> = (0..3)
            .map(|_| FreeElement::from_poly(rand_poly(&ring)))
            .filter(|g| !g.is_zero())
            .collect();
        let gb = buchberger(&ring, 1, &gens, order.clone()).unwrap();

        // an explicit combination of the generators is a member
        let mut combo = FreeElement::zero(ring.clone(), 1);
        for g in &gens {
            combo = combo.add(&g.mul_poly(&rand_poly(&ring)));
        }
        assert!(gb.reduces_to_zero(&combo).unwrap());

        // idempotence on an arbitrary element
        let w = FreeElement::from_poly(rand_poly(&ring));
        let nf = gb.normal_form(&w).unwrap();
        assert_eq!(gb.normal_form(&nf).unwrap(), nf);

        // the difference v - nf(v) is in the submodule
        assert!(gb.reduces_to_zero(&w.sub(&nf)).unwrap());
    }
}

/// A coefficient from a prime field never mixes into a rational polynomial:
/// the checked operation surface rejects it.
#[test]
fn checked_surface_rejects_cross_field_terms() {
    use koszul_core::polyring::{poly_arith, PolyOp};
    let q = qq_ring();
    let g = gf5_ring();
    assert!(poly_arith(&q.one(), &g.one(), PolyOp::Add).is_err());
    let _ = Coeff::Prime(3); // representative values are plain data
}

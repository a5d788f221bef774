//! Functor presentation tests: binomial ranks on free modules, frozen hand
//! expansions of the wedge/symmetric relations of I = (x, y, z), the
//! bilinearity oracle for the tensor-square relations, and the sign
//! bookkeeping of alternating expansion.

use koszul_core::error::Error;
use koszul_core::fpmod::PresentedModule;
use koszul_core::groebner::FreeElement;
use koszul_core::multilinear::{
    ext_power_presentation, sort_with_sign, sym_power_presentation, sym_tuples,
    tensor_presentation, wedge_insert, wedge_of, wedge_tuples,
};
use koszul_core::polyring::{CoefficientField, MonomialOrder, Polynomial, PolynomialRing};

fn qq() -> PolynomialRing {
    PolynomialRing::new(
        CoefficientField::rationals(),
        vec!["x".into(), "y".into(), "z".into()],
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn vecel(ring: &PolynomialRing, comps: &[&str]) -> FreeElement {
    FreeElement::from_components(
        comps
            .iter()
            .map(|s| ring.parse_poly(s).unwrap())
            .collect::<Vec<Polynomial>>(),
    )
    .unwrap()
}

/// I = (x, y, z) presented on the hand-written Koszul syzygies.
fn ideal_module(r: &PolynomialRing) -> PresentedModule {
    PresentedModule::new(
        r.clone(),
        3,
        vec![
            vecel(r, &["y", "-x", "0"]),
            vecel(r, &["z", "0", "-x"]),
            vecel(r, &["0", "z", "-y"]),
        ],
    )
    .unwrap()
}

#[test]
fn free_module_ranks_are_binomial() {
    let r = qq();
    let free3 = PresentedModule::free(r.clone(), 3);
    let free4 = PresentedModule::free(r.clone(), 4);

    let t = tensor_presentation(&free3, &free3).unwrap();
    assert_eq!(t.cover_rank(), 9);
    assert!(t.relations().is_empty());

    assert_eq!(ext_power_presentation(&free3, 2).unwrap().cover_rank(), 3);
    assert_eq!(ext_power_presentation(&free3, 3).unwrap().cover_rank(), 1);
    assert_eq!(ext_power_presentation(&free4, 2).unwrap().cover_rank(), 6);
    assert_eq!(ext_power_presentation(&free4, 3).unwrap().cover_rank(), 4);

    assert_eq!(sym_power_presentation(&free3, 2).unwrap().cover_rank(), 6);
    assert_eq!(sym_power_presentation(&free3, 3).unwrap().cover_rank(), 10);
    assert_eq!(sym_power_presentation(&free4, 2).unwrap().cover_rank(), 10);
}

#[test]
fn degree_cap_enforced() {
    let r = qq();
    let free = PresentedModule::free(r.clone(), 3);
    assert!(matches!(
        ext_power_presentation(&free, 4),
        Err(Error::UnsupportedDegree(4))
    ));
    assert!(matches!(
        sym_power_presentation(&free, 4),
        Err(Error::UnsupportedDegree(4))
    ));
    assert!(ext_power_presentation(&free, 0).is_err());
}

#[test]
fn first_power_is_the_module_itself() {
    let r = qq();
    let m = ideal_module(&r);
    assert_eq!(ext_power_presentation(&m, 1).unwrap(), m);
    assert_eq!(sym_power_presentation(&m, 1).unwrap(), m);
}

#[test]
fn tensor_with_cyclic_module() {
    let r = qq();
    let cyclic = PresentedModule::new(r.clone(), 1, vec![vecel(&r, &["x"])]).unwrap();
    let free1 = PresentedModule::free(r.clone(), 1);
    let t = tensor_presentation(&cyclic, &free1).unwrap();
    assert_eq!(t.cover_rank(), 1);
    assert_eq!(t.relations(), &[vecel(&r, &["x"])]);
}

#[test]
fn wedge_square_of_cyclic_is_zero() {
    let r = qq();
    let cyclic = PresentedModule::new(r.clone(), 1, vec![vecel(&r, &["x"])]).unwrap();
    let w = ext_power_presentation(&cyclic, 2).unwrap();
    assert_eq!(w.cover_rank(), 0);
    assert!(w.is_zero_module().unwrap());
}

#[test]
fn sym_square_of_cyclic_matches_the_cyclic_module() {
    let r = qq();
    let cyclic = PresentedModule::new(r.clone(), 1, vec![vecel(&r, &["x"])]).unwrap();
    let s = sym_power_presentation(&cyclic, 2).unwrap();
    assert_eq!(s.cover_rank(), 1);
    assert_eq!(s.relations(), &[vecel(&r, &["x"])]);
    assert_eq!(s.is_zero_module().unwrap(), cyclic.is_zero_module().unwrap());
    let gen_zero_in_s = s.generator(0).is_zero().unwrap();
    let gen_zero_in_cyclic = cyclic.generator(0).is_zero().unwrap();
    assert_eq!(gen_zero_in_s, gen_zero_in_cyclic);
}

#[test]
fn tensor_square_of_the_ideal_has_eighteen_relations() {
    let r = qq();
    let m = ideal_module(&r);
    let t = tensor_presentation(&m, &m).unwrap();
    assert_eq!(t.cover_rank(), 9);
    assert_eq!(t.relations().len(), 18);

    // bilinearity oracle: pushing a relation through e_i (x) e_j -> g_i g_j
    // must give the zero polynomial, exactly
    let gens = [r.var(0), r.var(1), r.var(2)];
    for rel in t.relations() {
        let mut value = r.zero();
        for i in 0..3 {
            for j in 0..3 {
                let c = rel.component(i * 3 + j);
                value = value.add(&c.mul(&gens[i]).mul(&gens[j]));
            }
        }
        assert!(value.is_zero(), "tensor relation fails bilinearity");
    }
}

#[test]
fn wedge_square_relations_match_hand_expansion() {
    let r = qq();
    let m = ideal_module(&r);
    let w = ext_power_presentation(&m, 2).unwrap();
    assert_eq!(w.cover_rank(), 3);
    // hand expansion on the basis (e1^e2, e1^e3, e2^e3); first relation is
    // s1 ^ e1 = (y e1 - x e2) ^ e1 = x (e1 ^ e2)
    let expected = vec![
        vecel(&r, &["x", "0", "0"]),
        vecel(&r, &["y", "0", "0"]),
        vecel(&r, &["0", "y", "-x"]),
        vecel(&r, &["0", "x", "0"]),
        vecel(&r, &["z", "0", "x"]),
        vecel(&r, &["0", "z", "0"]),
        vecel(&r, &["-z", "y", "0"]),
        vecel(&r, &["0", "0", "y"]),
        vecel(&r, &["0", "0", "z"]),
    ];
    assert_eq!(w.relations(), expected.as_slice());
}

#[test]
fn sym_square_relations_match_hand_expansion() {
    let r = qq();
    let m = ideal_module(&r);
    let s = sym_power_presentation(&m, 2).unwrap();
    assert_eq!(s.cover_rank(), 6);
    // basis (e1e1, e1e2, e1e3, e2e2, e2e3, e3e3); first relation is
    // s1 . e1 = y (e1e1) - x (e1e2)
    assert_eq!(
        s.relations()[0],
        vecel(&r, &["y", "-x", "0", "0", "0", "0"])
    );
    assert_eq!(s.relations().len(), 9);
}

#[test]
fn enumeration_orders_are_lexicographic() {
    assert_eq!(
        wedge_tuples(3, 2),
        vec![vec![0, 1], vec![0, 2], vec![1, 2]]
    );
    assert_eq!(
        sym_tuples(3, 2),
        vec![
            vec![0, 0],
            vec![0, 1],
            vec![0, 2],
            vec![1, 1],
            vec![1, 2],
            vec![2, 2]
        ]
    );
    assert_eq!(wedge_tuples(3, 0), vec![Vec::<usize>::new()]);
}

/// Sign bookkeeping is confluent: inserting i into a sorted pair agrees with
/// sorting the raw triple in one pass, for every distinct triple.
#[test]
fn alternating_sign_confluence() {
    for i in 0..5usize {
        for j in 0..5usize {
            for k in 0..5usize {
                if i == j || j == k || i == k {
                    assert!(sort_with_sign(&[i, j, k]).is_none());
                    continue;
                }
                let (pair, pair_sign) = sort_with_sign(&[j, k]).unwrap();
                let (ins, ins_sign) = wedge_insert(&pair, i).unwrap();
                let (direct, direct_sign) = sort_with_sign(&[i, j, k]).unwrap();
                assert_eq!(ins, direct);
                assert_eq!(pair_sign * ins_sign, direct_sign);
            }
        }
    }
}

#[test]
fn wedge_of_elements_is_alternating() {
    let r = qq();
    let samples = [
        vecel(&r, &["x", "y", "z"]),
        vecel(&r, &["x^2", "0", "y - z"]),
        vecel(&r, &["1", "x*y", "z^3"]),
    ];
    for a in &samples {
        let aa = wedge_of(a, a).unwrap();
        assert!(aa.is_zero(), "a ^ a must vanish identically");
        for b in &samples {
            let ab = wedge_of(a, b).unwrap();
            let ba = wedge_of(b, a).unwrap();
            assert_eq!(ab, ba.neg());
        }
    }
}

/// a ^ a reduces to zero in the wedge-square presentation for arbitrary
/// module elements, in every characteristic.
#[test]
fn wedge_diagonal_vanishes_in_the_presentation() {
    for field in [
        CoefficientField::prime(2).unwrap(),
        CoefficientField::prime(3).unwrap(),
        CoefficientField::rationals(),
    ] {
        let r = PolynomialRing::new(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let m = ideal_module(&r);
        let w = ext_power_presentation(&m, 2).unwrap();
        let mut state = 0xabcdef1234567890u64;
        let mut next = move |bound: u64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % bound
        };
        for _ in 0..20 {
            // random element of the cover: random small polynomial entries
            let comps: Vec<Polynomial> = (0..3)
                .map(|_| {
                    let mut acc = r.zero();
                    for _ in 0..2 {
                        let c = r.field().from_i64(next(7) as i64 - 3);
                        let exps = vec![
                            next(2) as u32,
                            next(2) as u32,
                            next(2) as u32,
                        ];
                        acc = acc.add(
                            &r.monomial(exps).scale(&c),
                        );
                    }
                    acc
                })
                .collect();
            let a = FreeElement::from_components(comps).unwrap();
            let aa = wedge_of(&a, &a).unwrap();
            let class = w.element(aa).unwrap();
            assert!(class.is_zero().unwrap());
        }
    }
}

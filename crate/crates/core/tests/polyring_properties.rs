//! Rabin's test against trial division, irreducible counts, Q-transform structure
//! and ring laws.

mod common;

use apoly_core::{Poly, PolyRing, ResourceCap};
use num_bigint::BigUint;
use proptest::prelude::*;

/// (r, n) pairs with q^n <= 2^bits.
fn cells(bits: u32) -> Vec<(u32, usize)> {
    (1..=bits)
        .flat_map(|r| (1..=bits / r).map(move |n| (r, n as usize)))
        .collect()
}

#[test]
fn rabin_matches_trial_division() {
    common::suites::rabin_vs_trial_division().unwrap();
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    for (r, n) in cells(20) {
        let ring = PolyRing::over_degree(r).unwrap();
        let found = (0..1u64 << (r as usize * n))
            .filter(|&idx| {
                let p = ring.monic_from_index(n, idx);
                ring.is_irreducible(&p).unwrap()
            })
            .count() as u64;
        assert_eq!(
            found,
            common::necklace_count(1 << r, n as u64),
            "r={r} n={n}"
        );
    }
}

#[test]
fn q_transform_structure() {
    common::suites::q_transform_structure().unwrap();
}

/// T^n f(T + 1/T) evaluated pointwise: for x ≠ 0, x^n f(x + 1/x) = f^Q(x).
#[test]
fn q_transform_agrees_with_substitution() {
    let ring = PolyRing::over_degree(3).unwrap();
    let field = ring.field().clone();
    for f in ring.enumerate_monic(3, ResourceCap::default()).unwrap() {
        let g = ring.q_transform(&f).unwrap();
        for x in 1..field.order() {
            let y = x ^ field.inv_raw(x).unwrap();
            let lhs = field.mul_raw(field.pow_raw(x, 3), ring.eval(&f, y));
            assert_eq!(lhs, ring.eval(&g, x));
        }
    }
}

#[test]
fn frobenius_order_via_powmod() {
    let ring = PolyRing::over_degree(1).unwrap();
    let m = ring.poly(&[1, 1, 1]).unwrap();
    let p = ring.powmod(&ring.t(), &BigUint::from(4u32), &m).unwrap();
    assert_eq!(p, ring.t());
    // T^(2^20) = T modulo a degree-20 irreducible
    let f = (0..1u64 << 20)
        .map(|i| ring.monic_from_index(20, i))
        .find(|p| ring.is_irreducible(p).unwrap())
        .unwrap();
    let e = BigUint::from(1u32) << 20;
    assert_eq!(ring.powmod(&ring.t(), &e, &f).unwrap(), ring.t());
}

fn poly_strategy(r: u32, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..(1 << r), 0..max_len)
}

proptest! {
    #[test]
    fn ring_laws(a in poly_strategy(3, 9), b in poly_strategy(3, 9), c in poly_strategy(3, 9)) {
        let ring = PolyRing::over_degree(3).unwrap();
        let (a, b, c) = (ring.poly(&a).unwrap(), ring.poly(&b).unwrap(), ring.poly(&c).unwrap());
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
        prop_assert!(ring.add(&a, &a).is_zero());
    }

    #[test]
    fn division_identity(a in poly_strategy(4, 12), b in poly_strategy(4, 7)) {
        let ring = PolyRing::over_degree(4).unwrap();
        let (a, b) = (ring.poly(&a).unwrap(), ring.poly(&b).unwrap());
        prop_assume!(!b.is_zero());
        let (q, r) = ring.divrem(&a, &b).unwrap();
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(2, 10), b in poly_strategy(2, 10)) {
        let ring = PolyRing::over_degree(2).unwrap();
        let (a, b) = (ring.poly(&a).unwrap(), ring.poly(&b).unwrap());
        let g = ring.gcd(&a, &b);
        if g.is_zero() {
            prop_assert!(a.is_zero() && b.is_zero());
        } else {
            prop_assert!(g.is_monic());
            prop_assert!(ring.divrem(&a, &g).unwrap().1.is_zero());
            prop_assert!(ring.divrem(&b, &g).unwrap().1.is_zero());
        }
    }

    #[test]
    fn reciprocal_is_an_involution(mut c in poly_strategy(5, 10), lead in 1u64..32, constant in 1u64..32) {
        let ring = PolyRing::over_degree(5).unwrap();
        c.insert(0, constant);
        c.push(lead);
        let p: Poly = ring.poly(&c).unwrap();
        let back = ring.reciprocal(&ring.reciprocal(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

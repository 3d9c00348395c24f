//! Exact-arithmetic properties of the closed-form counts.

mod common;

use apoly_core::counting::{
    bound_check, corrected_bound_check, count_formula, divisors, existence, inert_count_c, lucas_s,
    moebius, niederreiter_rhs, normalized_deviation, place_count_b, rational_place_count, sigma0,
    split_two_adic,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use proptest::prelude::*;

#[test]
fn binomial_expansion_matches_recurrence() {
    for t in 1..=200 {
        assert_eq!(niederreiter_rhs(t).unwrap(), lucas_s(t), "t={t}");
    }
}

#[test]
fn lucas_obeys_the_weil_bound() {
    // |α|^2 = 2
    for t in 0..=300u64 {
        let s = lucas_s(t);
        assert!(&s * &s <= BigInt::from(4) << t, "t={t}");
    }
}

#[test]
fn lucas_is_a_power_sum() {
    // α, ᾱ are the roots of X^2 + X + 2, so s_t is the trace of C^t for its companion C
    let (mut m00, mut m01, mut m10, mut m11) = (
        BigInt::one(),
        BigInt::from(0),
        BigInt::from(0),
        BigInt::one(),
    );
    for t in 0..=120u64 {
        assert_eq!(&m00 + &m11, lucas_s(t), "t={t}");
        // multiply by [[0, -2], [1, -1]]
        let (a, b, c, d) = (
            m01.clone(),
            -(&m00 * 2i32) - &m01,
            m11.clone(),
            -(&m10 * 2i32) - &m11,
        );
        (m00, m01, m10, m11) = (a, b, c, d);
    }
}

#[test]
fn moebius_matches_factor_counting() {
    for n in 1..=2000u64 {
        assert_eq!(moebius(n) as i64, common::mu(n), "n={n}");
        let sum: i64 = divisors(n).iter().map(|&d| moebius(d) as i64).sum();
        assert_eq!(sum, (n == 1) as i64);
    }
}

#[test]
fn divisor_helpers() {
    for n in 1..=500u64 {
        let ds = divisors(n);
        assert!(ds.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ds, (1..=n).filter(|d| n % d == 0).collect::<Vec<_>>());
        assert_eq!(sigma0(n), ds.len() as u64);
        let (k, m) = split_two_adic(n);
        assert_eq!(m << k, n);
        assert_eq!(m % 2, 1);
    }
}

#[test]
fn inert_places_are_twice_the_count() {
    for r in 1..=8 {
        for n in 1..=64 {
            assert_eq!(
                inert_count_c(r, n).unwrap(),
                count_formula(r, n).unwrap() * 2,
                "r={r} n={n}"
            );
        }
    }
}

#[test]
fn place_counts_sum_to_rational_places() {
    // sum_{d | e} d B(d) = N(e)
    for r in 1..=4u32 {
        for e in 1..=30u32 {
            let total: BigInt = divisors(e as u64)
                .into_iter()
                .map(|d| place_count_b(r, d as u32).unwrap() * d)
                .sum();
            assert_eq!(total, rational_place_count(r, e as u64), "r={r} e={e}");
        }
    }
}

#[test]
fn counts_are_nonnegative_and_bounded() {
    for r in 1..=8u32 {
        for n in 1..=64u32 {
            let a = count_formula(r, n).unwrap();
            assert!(!a.is_negative());
            // at most the number of monic irreducibles
            assert!(a * n <= BigInt::one() << (r * n) as usize);
            assert!(corrected_bound_check(r, n).unwrap().holds, "r={r} n={n}");
        }
    }
}

#[test]
fn stated_estimate_examples() {
    for (r, n) in [(1, 1), (1, 3), (1, 7), (2, 6)] {
        assert!(bound_check(r, n).unwrap().holds, "r={r} n={n}");
    }
    // A_1(8) = 9 and s_8 = -31: |4n A - q^n| = 32 against 2^(8/3) + 1 + 2*2^(4/3) < 13
    let b = bound_check(1, 8).unwrap();
    assert_eq!(count_formula(1, 8).unwrap(), BigInt::from(9));
    assert_eq!(b.lhs_numerator, BigInt::from(32));
    assert!(!b.holds);
    assert!(corrected_bound_check(1, 8).unwrap().holds);
}

#[test]
fn relative_deviation_against_twice_the_estimate() {
    // |4n A_1(n)/2^n - 1| < 2 σ0(n) (2^(n/3) + 1 + 2*2^(n/6)) / 2^n
    let within = |n: u32| {
        let (num, den) = normalized_deviation(1, n).unwrap();
        let lhs = num.to_f64().unwrap() / den.to_f64().unwrap();
        let nf = n as f64;
        let rhs =
            2.0 * sigma0(n as u64) as f64 * ((nf / 3.0).exp2() + 1.0 + 2.0 * (nf / 6.0).exp2())
                / nf.exp2();
        lhs < rhs
    };
    assert!(within(16));
    assert!(within(20));
    // 0.000340 against 0.000276
    assert!(!within(24));
}

#[test]
fn existence_fails_only_at_the_exception() {
    for r in 1..=8 {
        for n in 1..=64 {
            assert_eq!(existence(r, n).unwrap(), (r, n) != (1, 3), "r={r} n={n}");
        }
    }
}

#[test]
fn deviation_shrinks() {
    let ratio = |n| {
        let (num, den) = normalized_deviation(1, n).unwrap();
        (num, den)
    };
    for w in [12u32, 16, 20, 24, 28, 32].windows(2) {
        let (a, b) = (ratio(w[0]), ratio(w[1]));
        // a.0/a.1 > b.0/b.1
        assert!(&a.0 * &b.1 > &b.0 * &a.1, "n={} -> {}", w[0], w[1]);
    }
}

#[test]
fn rejects_zero_arguments() {
    assert!(count_formula(0, 3).is_err());
    assert!(count_formula(2, 0).is_err());
    assert!(niederreiter_rhs(0).is_err());
}

proptest! {
    #[test]
    fn formula_is_exact_for_large_parameters(r in 1u32..=64, n in 1u32..=256) {
        // the integrality checks inside the formula never fire
        let a = count_formula(r, n).unwrap();
        prop_assert_eq!(inert_count_c(r, n).unwrap(), a * 2);
    }

    #[test]
    fn recurrence_holds(t in 0u64..500) {
        prop_assert_eq!(lucas_s(t + 2), -lucas_s(t + 1) - lucas_s(t) * 2);
    }
}

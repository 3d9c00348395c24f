//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's Rabin test, trace masks or closed-form counts.
#![allow(dead_code)]

use apoly_core::{Poly, PolyRing};

/// Schoolbook product in F_2[z]/(modulus), bit by bit.
pub fn naive_field_mul(a: u64, b: u64, modulus: u64, m: u32) -> u64 {
    let mut acc = 0u128;
    for i in 0..m {
        if (b >> i) & 1 == 1 {
            acc ^= (a as u128) << i;
        }
    }
    for i in (m..2 * m).rev() {
        if (acc >> i) & 1 == 1 {
            acc ^= (modulus as u128) << (i - m);
        }
    }
    acc as u64
}

/// F_2[z] polynomial remainder on bit vectors.
pub fn bits_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        a ^= b << ((63 - a.leading_zeros()) - db);
    }
    a
}

/// Irreducibility over F_2 by trial division with every polynomial of degree 1..=deg/2.
pub fn bits_irreducible_trial(f: u64) -> bool {
    let d = 63 - f.leading_zeros();
    (2u64..(1 << (d / 2 + 1))).all(|g| bits_rem(f, g) != 0)
}

/// Irreducibility over F_q by trial division with every monic polynomial of degree
/// 1..=deg/2.
pub fn irreducible_by_trial_division(ring: &PolyRing, p: &Poly) -> bool {
    let n = p.degree().expect("nonzero");
    assert!(n >= 1);
    let q = ring.field().order();
    for d in 1..=n / 2 {
        for idx in 0..q.pow(d as u32) {
            let g = monic(ring, d, idx);
            let (_, rem) = ring.divrem(p, &g).unwrap();
            if rem.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic degree-d polynomial with low coefficients given by the base-q digits of idx.
pub fn monic(ring: &PolyRing, d: usize, mut idx: u64) -> Poly {
    let q = ring.field().order();
    let mut c = Vec::with_capacity(d + 1);
    for _ in 0..d {
        c.push(idx % q);
        idx /= q;
    }
    c.push(1);
    ring.poly(&c).unwrap()
}

/// Number of monic irreducible polynomials of degree n over F_q by the necklace formula.
pub fn necklace_count(q: u64, n: u64) -> u64 {
    let mut sum: i128 = 0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            sum += mu(n / d) as i128 * (q as i128).pow(d as u32);
        }
    }
    (sum / n as i128) as u64
}

/// Möbius function by direct factor counting (independent of the library's).
pub fn mu(n: u64) -> i64 {
    let (mut n, mut k, mut p) = (n, 0, 2);
    while n > 1 {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub mod suites;

/// Tr_{F_{2^m}/F_2}(a) as a + a^2 + ... + a^(2^(m-1)), with schoolbook products.
pub fn naive_trace(a: u64, modulus: u64, m: u32) -> u64 {
    let (mut acc, mut x) = (0, a);
    for _ in 0..m {
        acc ^= x;
        x = naive_field_mul(x, x, modulus, m);
    }
    acc
}

/// The A-polynomial predicate from its definition: trial division, definitional traces
/// and an inverse found by search. Intended for q <= 256.
pub fn a_polynomial_oracle(ring: &PolyRing, p: &Poly) -> bool {
    let f = ring.field();
    let (modulus, m) = (f.modulus(), f.degree());
    let n = p.degree().expect("nonzero");
    let a0 = p.coeff(0);
    if a0 == 0 {
        return false;
    }
    let a0_inv = (1..f.order())
        .find(|&b| naive_field_mul(a0, b, modulus, m) == 1)
        .unwrap();
    let a_top = p.coeff(n - 1);
    let a_1 = if n == 1 { 1 } else { p.coeff(1) };
    naive_trace(a_top, modulus, m) == 1
        && naive_trace(naive_field_mul(a_1, a0_inv, modulus, m), modulus, m) == 1
        && irreducible_by_trial_division(ring, p)
}

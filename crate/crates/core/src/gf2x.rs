//! Packed polynomials over F_2 (bit i = coefficient of z^i), degree <= 63.

/// Carry-less product.
#[inline]
pub fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let a = a as u128;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

#[inline]
pub fn degree(a: u128) -> Option<u32> {
    if a == 0 {
        None
    } else {
        Some(127 - a.leading_zeros())
    }
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
#[inline]
pub fn rem(mut a: u128, f: u64) -> u64 {
    let df = degree(f as u128).expect("modulus must be nonzero");
    let f = f as u128;
    while let Some(da) = degree(a) {
        if da < df {
            break;
        }
        a ^= f << (da - df);
    }
    a as u64
}

#[inline]
pub fn mulmod(a: u64, b: u64, f: u64) -> u64 {
    rem(clmul(a, b), f)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a as u128, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test over F_2 for a polynomial of degree 1..=63.
pub fn is_irreducible(f: u64) -> bool {
    let Some(m) = degree(f as u128) else {
        return false;
    };
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = rem(2, f);
    // powers[k] = x^(2^k) mod f
    let mut powers = Vec::with_capacity(m as usize + 1);
    powers.push(x);
    for k in 0..m as usize {
        let p = powers[k];
        powers.push(mulmod(p, p, f));
    }
    if powers[m as usize] != x {
        return false;
    }
    crate::counting::prime_factors(m as u64)
        .into_iter()
        .all(|l| gcd(f, powers[(m as u64 / l) as usize] ^ x) == 1)
}

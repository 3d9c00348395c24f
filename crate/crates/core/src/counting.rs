//! Closed-form counts in exact integer arithmetic.
//!
//! The elliptic function field y^2 + y = x + 1/x over F_2 has L-polynomial
//! 2t^2 + t + 1 = (1 - αt)(1 - ᾱt) with α = (-1 + √-7)/2. Every count below is
//! expressed through the power sums s_t = α^t + ᾱ^t, which are integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn require_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn exact_div(value: BigInt, divisor: BigInt, what: &'static str) -> Result<BigInt> {
    let (q, r) = value.div_rem(&divisor);
    if !r.is_zero() {
        return Err(Error::indivisible(what, value, divisor));
    }
    Ok(q)
}

/// s_t = α^t + ᾱ^t from s_0 = 2, s_1 = -1, s_{t+2} = -s_{t+1} - 2 s_t.
pub fn lucas_s(t: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::from(-1));
    for _ in 0..t {
        let next = -&b - (&a << 1);
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// α^t + ᾱ^t from the binomial expansion
/// 2^(1-t) * sum_{j <= t/2} C(t, 2j) (-1)^(t+j) 7^j, for t >= 1.
pub fn niederreiter_rhs(t: u64) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be >= 1".into()));
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one(); // C(t, i)
    let mut seven = BigInt::one(); // 7^(i/2) at even i
    for i in 0..=t {
        if i % 2 == 0 {
            let j = i / 2;
            let term = &binom * &seven;
            if (t + j).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            seven *= 7;
        }
        binom = binom * (t - i) / (i + 1);
    }
    exact_div(sum, pow2(t - 1), "binomial sum for α^t + ᾱ^t")
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors are defined for n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn sigma0(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// n = 2^k * m with m odd.
pub fn split_two_adic(n: u64) -> (u32, u64) {
    assert!(n >= 1);
    let k = n.trailing_zeros();
    (k, n >> k)
}

/// q^e + 1 - α^(re) - ᾱ^(re): the number of degree-one places of the curve over F_{q^e}.
pub fn rational_place_count(r: u32, e: u64) -> BigInt {
    let re = r as u64 * e;
    pow2(re) + 1 - lucas_s(re)
}

/// Number of A-polynomials of degree n over F_{2^r}:
/// A_r(n) = 1/(4n) * sum_{d | m} μ(m/d) (q^(2^k d) + 1 - α^(r 2^k d) - ᾱ^(r 2^k d)).
pub fn count_formula(r: u32, n: u32) -> Result<BigInt> {
    require_positive("r", r)?;
    require_positive("n", n)?;
    let (k, m) = split_two_adic(n as u64);
    let sum: BigInt = divisors(m)
        .into_iter()
        .map(|d| moebius(m / d) as i64 * rational_place_count(r, d << k))
        .sum();
    exact_div(sum, BigInt::from(4u64 * n as u64), "A-polynomial count")
}

/// Degree-n places B(n) = 1/n * sum_{d | n} μ(n/d) (q^d + 1 - α^(rd) - ᾱ^(rd)).
pub fn place_count_b(r: u32, n: u32) -> Result<BigInt> {
    require_positive("r", r)?;
    require_positive("n", n)?;
    let n = n as u64;
    let sum: BigInt = divisors(n)
        .into_iter()
        .map(|d| moebius(n / d) as i64 * rational_place_count(r, d))
        .sum();
    exact_div(sum, BigInt::from(n), "place count")
}

/// Inert degree-n places C_r(n) = sum_{i=1}^{k+1} B(2^(k+1-i) m) / 2^i, evaluated
/// over the common denominator 2^(k+1).
pub fn inert_count_c(r: u32, n: u32) -> Result<BigInt> {
    require_positive("r", r)?;
    require_positive("n", n)?;
    let (k, m) = split_two_adic(n as u64);
    let mut sum = BigInt::zero();
    for i in 1..=k + 1 {
        let e = k + 1 - i;
        sum += place_count_b(r, ((1u64 << e) * m) as u32)? << e;
    }
    exact_div(sum, pow2(k as u64 + 1), "inert place count")
}

/// Whether some A-polynomial of degree n exists over F_{2^r}.
pub fn existence(r: u32, n: u32) -> Result<bool> {
    Ok(count_formula(r, n)? >= BigInt::one())
}

/// Both sides of an estimate for |A_r(n) - q^n/4n|.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    /// |4n A_r(n) - q^n|; the left side is this over `denominator`.
    pub lhs_numerator: BigInt,
    /// 4n.
    pub denominator: BigInt,
    pub lhs_approx: f64,
    pub rhs_approx: f64,
    pub holds: bool,
}

/// Fraction bits of the fixed-point evaluation of the right side.
const BOUND_PRECISION: u64 = 128;

/// An upper bound for 2^(e/k) * 2^BOUND_PRECISION.
fn scaled_root(e: u64, k: u32) -> BigUint {
    (BigUint::one() << (e + k as u64 * BOUND_PRECISION)).nth_root(k) + 1u32
}

fn compare(r: u32, n: u32, rhs_scaled: BigInt, rhs_approx: f64) -> Result<BoundCheck> {
    let a = count_formula(r, n)?;
    let four_n = BigInt::from(4u64 * n as u64);
    let lhs_numerator = (&four_n * &a - pow2(r as u64 * n as u64)).abs();
    let slack_den = BigInt::from(10u64).pow(18);
    let holds = (&lhs_numerator << BOUND_PRECISION) * &slack_den <= rhs_scaled * (&slack_den + 1);
    let lhs_approx = lhs_numerator.to_f64().unwrap_or(f64::INFINITY) / (4.0 * n as f64);
    Ok(BoundCheck {
        lhs_numerator,
        denominator: four_n,
        lhs_approx,
        rhs_approx,
        holds,
    })
}

/// The estimate as stated: |A_r(n) - q^n/4n| <= σ0(m)/(4n) (q^(n/3) + 1 + 2*2^(rn/6)).
pub fn bound_check(r: u32, n: u32) -> Result<BoundCheck> {
    require_positive("r", r)?;
    require_positive("n", n)?;
    let rn = r as u64 * n as u64;
    let s0 = sigma0(split_two_adic(n as u64).1);
    let term = scaled_root(rn, 3) + (BigUint::one() << BOUND_PRECISION) + (scaled_root(rn, 6) << 1);
    let rhs_scaled = BigInt::from(s0) * BigInt::from(term);
    let rn_f = rn as f64;
    let rhs_approx =
        s0 as f64 / (4.0 * n as f64) * ((rn_f / 3.0).exp2() + 1.0 + 2.0 * (rn_f / 6.0).exp2());
    compare(r, n, rhs_scaled, rhs_approx)
}

/// The estimate with the d = m term bounded by |1 - α^(rn) - ᾱ^(rn)| <= 1 + 2*2^(rn/2):
/// |A_r(n) - q^n/4n| <= ((σ0(m) - 1)(q^(n/3) + 1 + 2*2^(rn/6)) + 1 + 2*2^(rn/2)) / (4n).
pub fn corrected_bound_check(r: u32, n: u32) -> Result<BoundCheck> {
    require_positive("r", r)?;
    require_positive("n", n)?;
    let rn = r as u64 * n as u64;
    let s0 = sigma0(split_two_adic(n as u64).1);
    let one = BigUint::one() << BOUND_PRECISION;
    let proper = scaled_root(rn, 3) + &one + (scaled_root(rn, 6) << 1);
    let leading = one + (scaled_root(rn, 2) << 1);
    let rhs_scaled = BigInt::from(BigUint::from(s0 - 1) * proper + leading);
    let rn_f = rn as f64;
    let rhs_approx = ((s0 - 1) as f64 * ((rn_f / 3.0).exp2() + 1.0 + 2.0 * (rn_f / 6.0).exp2())
        + 1.0
        + 2.0 * (rn_f / 2.0).exp2())
        / (4.0 * n as f64);
    compare(r, n, rhs_scaled, rhs_approx)
}

/// |4n A_r(n) / q^n - 1| as an exact fraction (numerator, denominator).
pub fn normalized_deviation(r: u32, n: u32) -> Result<(BigInt, BigInt)> {
    let a = count_formula(r, n)?;
    let q_n = pow2(r as u64 * n as u64);
    let num = (BigInt::from(4u64 * n as u64) * a - &q_n).abs();
    Ok((num, q_n))
}

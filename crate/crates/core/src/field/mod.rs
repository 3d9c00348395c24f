//! Binary fields F_{2^m} in the polynomial basis, and relative extensions F_{q^n} / F_q.

mod linear;
mod tower;

use std::fmt;
use std::sync::Arc;

pub use linear::LinearMap;
pub use tower::{ExtensionTower, TowerElement, MAX_TOWER_BITS};

use crate::error::{Error, Result};
use crate::gf2x;

pub const MAX_FIELD_DEGREE: u32 = 63;

/// Largest degree that gets a full multiplication table (2^(2m) bytes).
const TABLE_DEGREE: u32 = 8;

/// Largest degree that gets discrete log / antilog tables.
const LOG_TABLE_DEGREE: u32 = 16;

/// Smallest monic irreducible polynomial of degree `m` over F_2, where candidates are
/// ordered by the integer formed from their low coefficients a_0..a_{m-1} (a_0 = bit 0).
///
/// The returned word includes the leading bit `1 << m`.
pub fn find_field_modulus(m: u32) -> Result<u64> {
    if m == 0 || m > MAX_FIELD_DEGREE {
        return Err(Error::UnsupportedFieldDegree(m));
    }
    let lead = 1u64 << m;
    (0..lead)
        .map(|low| lead | low)
        .find(|&f| gf2x::is_irreducible(f))
        .ok_or(Error::UnsupportedFieldDegree(m))
}

/// An element of F_{2^m}; bit i is the coefficient of z^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    m: u32,
    bits: u64,
}

impl FieldElement {
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Extension degree over F_2 of the field this element belongs to.
    pub fn field_degree(self) -> u32 {
        self.m
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F2^{}", self.bits, self.m)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

/// F_{2^m} = F_2[z]/(modulus) with the deterministic modulus from [`find_field_modulus`].
#[derive(Clone)]
pub struct FieldSpec {
    m: u32,
    modulus: u64,
    trace_mask: u64,
    table: Option<Arc<[u8]>>,
    logs: Option<Arc<LogTables>>,
}

struct LogTables {
    /// log[a] for a != 0
    log: Vec<u32>,
    /// exp[i] = g^i for i < 2(2^m - 1), so sums of two logs need no reduction
    exp: Vec<u64>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#b}", self.modulus))
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(m: u32) -> Result<Self> {
        let modulus = find_field_modulus(m)?;
        let mut spec = FieldSpec {
            m,
            modulus,
            trace_mask: 0,
            table: None,
            logs: None,
        };
        if m <= TABLE_DEGREE {
            let size = 1usize << m;
            let mut table = vec![0u8; size * size];
            for a in 0..size as u64 {
                for b in 0..size as u64 {
                    table[((a as usize) << m) | b as usize] = spec.mul_slow(a, b) as u8;
                }
            }
            spec.table = Some(table.into());
        } else if m <= LOG_TABLE_DEGREE {
            spec.logs = Some(Arc::new(spec.build_log_tables()));
        }
        spec.trace_mask = (0..m)
            .filter(|&i| spec.trace_by_definition_raw(1 << i) == 1)
            .fold(0, |acc, i| acc | (1 << i));
        Ok(spec)
    }

    /// F_2 itself (modulus z, so every element is 0 or 1).
    pub fn binary() -> Self {
        FieldSpec::new(1).expect("degree 1 is always supported")
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// The number of elements, 2^m.
    pub fn order(&self) -> u64 {
        1u64 << self.m
    }

    /// Full modulus word, including the leading bit.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn contains_raw(&self, bits: u64) -> bool {
        bits >> self.m == 0
    }

    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if !self.contains_raw(bits) {
            return Err(Error::NotInField { bits, m: self.m });
        }
        Ok(FieldElement { m: self.m, bits })
    }

    pub(crate) fn wrap(&self, bits: u64) -> FieldElement {
        debug_assert!(self.contains_raw(bits));
        FieldElement { m: self.m, bits }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |b| self.wrap(b))
    }

    pub(crate) fn check(&self, a: FieldElement) -> Result<u64> {
        if a.m != self.m {
            return Err(Error::FieldMismatch {
                left: self.m,
                right: a.m,
            });
        }
        Ok(a.bits)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.check(a)? ^ self.check(b)?))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.mul_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a)?;
        self.inv_raw(a)
            .map(|x| self.wrap(x))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement> {
        Ok(self.wrap(self.pow_raw(self.check(a)?, e)))
    }

    /// Absolute trace Tr_{F_{2^m}/F_2}.
    pub fn trace(&self, a: FieldElement) -> Result<u8> {
        Ok(self.trace_raw(self.check(a)?))
    }

    fn build_log_tables(&self) -> LogTables {
        let units = self.order() - 1;
        let primes = crate::counting::prime_factors(units);
        let g = (2..self.order())
            .find(|&g| primes.iter().all(|&p| self.pow_raw(g, units / p) != 1))
            .expect("the unit group is cyclic");
        let mut log = vec![0u32; self.order() as usize];
        let mut exp = Vec::with_capacity(2 * units as usize);
        let mut x = 1u64;
        for i in 0..units {
            log[x as usize] = i as u32;
            exp.push(x);
            x = self.mul_slow(x, g);
        }
        exp.extend_from_within(..);
        LogTables { log, exp }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        gf2x::mulmod(a, b, self.modulus)
    }

    #[inline]
    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.table {
            return t[((a as usize) << self.m) | b as usize] as u64;
        }
        if let Some(l) = &self.logs {
            if a == 0 || b == 0 {
                return 0;
            }
            return l.exp[(l.log[a as usize] + l.log[b as usize]) as usize];
        }
        self.mul_slow(a, b)
    }

    #[inline]
    pub fn square_raw(&self, a: u64) -> u64 {
        self.mul_raw(a, a)
    }

    pub fn pow_raw(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, a);
            }
            a = self.square_raw(a);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm on bit polynomials.
    pub fn inv_raw(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.m == 1 {
            return Some(1);
        }
        // invariant: s * a == r0 (mod modulus), t * a == r1 (mod modulus)
        let (mut r0, mut r1) = (self.modulus, a);
        let (mut s0, mut s1) = (0u64, 1u64);
        while r1 != 1 {
            let d0 = gf2x::degree(r0 as u128).unwrap();
            let d1 = gf2x::degree(r1 as u128).unwrap();
            if d0 < d1 {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
                continue;
            }
            let shift = d0 - d1;
            r0 ^= r1 << shift;
            s0 ^= s1 << shift;
            if r0 == 0 {
                unreachable!("modulus is irreducible");
            }
            if r0 == 1 {
                return Some(gf2x::rem(s0 as u128, self.modulus));
            }
        }
        Some(gf2x::rem(s1 as u128, self.modulus))
    }

    /// Inverse as a^(2^m - 2).
    pub fn inv_by_pow_raw(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(self.pow_raw(a, self.order() - 2))
    }

    /// Trace as a parity against the precomputed trace functional.
    #[inline]
    pub fn trace_raw(&self, a: u64) -> u8 {
        ((a & self.trace_mask).count_ones() & 1) as u8
    }

    /// Trace as the sum of the conjugates a^(2^i), i < m.
    pub fn trace_by_definition_raw(&self, a: u64) -> u8 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.m {
            acc ^= x;
            x = self.square_raw(x);
        }
        debug_assert!(acc <= 1, "trace must land in F_2");
        acc as u8
    }

    /// The functional x -> Tr(c x) as a bit mask over the polynomial basis.
    pub fn trace_form_mask(&self, c: u64) -> u64 {
        (0..self.m)
            .filter(|&i| self.trace_raw(self.mul_raw(c, 1 << i)) == 1)
            .fold(0, |acc, i| acc | (1 << i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_for_small_degrees() {
        assert_eq!(find_field_modulus(1).unwrap(), 0b10);
        assert_eq!(find_field_modulus(2).unwrap(), 0b111);
        assert_eq!(find_field_modulus(3).unwrap(), 0b1011);
        assert_eq!(find_field_modulus(8).unwrap(), 0b1_0001_1011);
        assert!(find_field_modulus(0).is_err());
        assert!(find_field_modulus(64).is_err());
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = FieldSpec::new(2).unwrap();
        let z = f4.element(2).unwrap();
        let one = f4.one();
        assert_eq!(f4.add(z, z).unwrap(), f4.zero());
        assert_eq!(f4.add(z, one).unwrap().bits(), 3);
        assert_eq!(f4.mul(z, z).unwrap().bits(), 3);
        assert_eq!(f4.mul(z, f4.element(3).unwrap()).unwrap(), one);
        assert_eq!(f4.inv(z).unwrap().bits(), 3);
        assert_eq!(f4.trace(z).unwrap(), 1);
        assert_eq!(f4.trace(one).unwrap(), 0);
    }

    #[test]
    fn f2_arithmetic() {
        let f2 = FieldSpec::binary();
        let one = f2.one();
        assert_eq!(f2.add(one, one).unwrap(), f2.zero());
        assert_eq!(f2.mul(one, one).unwrap(), one);
        assert_eq!(f2.inv(one).unwrap(), one);
        assert_eq!(f2.trace(one).unwrap(), 1);
    }

    #[test]
    fn f16_inverse_of_z() {
        let f16 = FieldSpec::new(4).unwrap();
        let z = f16.element(2).unwrap();
        assert_eq!(f16.inv(z).unwrap().bits(), 0b1001);
    }

    #[test]
    fn errors() {
        let f4 = FieldSpec::new(2).unwrap();
        let f16 = FieldSpec::new(4).unwrap();
        assert_eq!(f4.element(4), Err(Error::NotInField { bits: 4, m: 2 }));
        assert_eq!(f4.inv(f4.zero()), Err(Error::DivisionByZero));
        let a = f16.element(1).unwrap();
        assert_eq!(
            f4.mul(f4.one(), a),
            Err(Error::FieldMismatch { left: 2, right: 4 })
        );
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = FieldSpec::new(6).unwrap();
        for a in 0..64 {
            for b in 0..64 {
                assert_eq!(f.mul_raw(a, b), f.mul_slow(a, b));
            }
        }
        let f = FieldSpec::new(11).unwrap();
        assert!(f.logs.is_some());
        for a in (0..2048).step_by(7) {
            for b in 0..2048 {
                assert_eq!(f.mul_raw(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn large_field_inverse() {
        let f = FieldSpec::new(63).unwrap();
        for a in [1u64, 2, 3, 0xdead_beef, (1 << 63) - 1] {
            let inv = f.inv_raw(a).unwrap();
            assert_eq!(f.mul_raw(a, inv), 1);
            assert_eq!(Some(inv), f.inv_by_pow_raw(a));
        }
    }
}

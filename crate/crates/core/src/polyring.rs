//! Dense univariate polynomials over F_{2^r}: arithmetic, Rabin's irreducibility
//! test, the reciprocal map and the Q-transform.

use num_bigint::BigUint;

use crate::error::{Error, ResourceCap, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::gf2x;

/// Coefficients in the polynomial basis of F_{2^r}, constant term first, with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub(crate) fn from_raw(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of T^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }
}

/// F_q[T] for a fixed F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: FieldSpec,
}

impl PolyRing {
    pub fn new(field: FieldSpec) -> Self {
        PolyRing { field }
    }

    pub fn over_degree(r: u32) -> Result<Self> {
        Ok(PolyRing::new(FieldSpec::new(r)?))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn poly(&self, coeffs: &[u64]) -> Result<Poly> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !self.field.contains_raw(c)) {
            return Err(Error::NotInField {
                bits: bad,
                m: self.field.degree(),
            });
        }
        Ok(Poly::from_raw(coeffs.to_vec()))
    }

    pub fn from_elements(&self, coeffs: &[FieldElement]) -> Result<Poly> {
        let raw = coeffs
            .iter()
            .map(|&c| self.field.check(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(raw))
    }

    pub fn coefficient(&self, p: &Poly, i: usize) -> FieldElement {
        self.field.wrap(p.coeff(i))
    }

    /// The indeterminate T.
    pub fn t(&self) -> Poly {
        Poly::from_raw(vec![0, 1])
    }

    pub fn one(&self) -> Poly {
        Poly::from_raw(vec![1])
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o ^= s;
        }
        Poly::from_raw(out)
    }

    pub fn scale(&self, a: &Poly, c: u64) -> Poly {
        Poly::from_raw(a.coeffs.iter().map(|&x| self.field.mul_raw(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] ^= self.field.mul_raw(x, y);
            }
        }
        Poly::from_raw(out)
    }

    /// Scales `p` so that its leading coefficient is 1.
    pub fn make_monic(&self, p: &Poly) -> Result<Poly> {
        let inv = self
            .field
            .inv_raw(p.leading())
            .ok_or(Error::DivisionByZero)?;
        Ok(self.scale(p, inv))
    }

    pub fn divrem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self
            .field
            .inv_raw(b.leading())
            .expect("nonzero leading coefficient");
        let mut rem = a.coeffs.clone();
        let Some(da) = a.degree().filter(|&d| d >= db) else {
            return Ok((Poly::zero(), a.clone()));
        };
        let mut quot = vec![0u64; da - db + 1];
        for k in (db..=da).rev() {
            let c = self.field.mul_raw(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for (i, &bi) in b.coeffs.iter().enumerate() {
                rem[k - db + i] ^= self.field.mul_raw(c, bi);
            }
        }
        rem.truncate(db);
        Ok((Poly::from_raw(quot), Poly::from_raw(rem)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if b.is_monic() {
            let mut v = a.coeffs.clone();
            self.reduce_monic(&mut v, &b.coeffs);
            return Ok(Poly::from_raw(v));
        }
        Ok(self.divrem(a, b)?.1)
    }

    /// Reduces `v` in place modulo the monic polynomial `f`.
    fn reduce_monic(&self, v: &mut Vec<u64>, f: &[u64]) {
        let d = f.len() - 1;
        if v.len() > d {
            for k in (d..v.len()).rev() {
                let c = v[k];
                if c == 0 {
                    continue;
                }
                for (i, &fi) in f[..d].iter().enumerate() {
                    if fi != 0 {
                        v[k - d + i] ^= self.field.mul_raw(c, fi);
                    }
                }
            }
            v.truncate(d);
        }
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            self.make_monic(&a).expect("nonzero")
        }
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
        self.rem(&self.mul(a, b), m)
    }

    /// p^e mod m by square-and-multiply.
    pub fn powmod(&self, p: &Poly, e: &BigUint, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = self.rem(&self.one(), m)?;
        let base = self.rem(p, m)?;
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m)?;
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m)?;
            }
        }
        Ok(acc)
    }

    /// h^q mod f for monic f, as r successive squarings (coefficient Frobenius plus
    /// spreading to even exponents). `scratch` is reused between calls.
    fn frobenius_mod(&self, h: &mut Vec<u64>, f: &Poly, scratch: &mut Vec<u64>) {
        for _ in 0..self.field.degree() {
            scratch.clear();
            scratch.resize((2 * h.len()).saturating_sub(1), 0);
            for (i, &c) in h.iter().enumerate() {
                scratch[2 * i] = self.field.square_raw(c);
            }
            self.reduce_monic(scratch, &f.coeffs);
            std::mem::swap(h, scratch);
        }
    }

    /// Rabin's test: f of degree n is irreducible iff T^(q^n) = T mod f and
    /// gcd(T^(q^(n/l)) - T, f) = 1 for every prime l | n.
    pub fn is_irreducible(&self, p: &Poly) -> Result<bool> {
        let n = match p.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        if p.coeff(0) == 0 {
            return Ok(false);
        }
        if self.field.degree() == 1 && n < 64 {
            let packed = p
                .coeffs
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (c << i));
            return Ok(gf2x::is_irreducible(packed));
        }
        self.is_irreducible_generic(p, n)
    }

    fn is_irreducible_generic(&self, p: &Poly, n: usize) -> Result<bool> {
        let f = self.make_monic(p)?;
        let t = self.t();
        let mut pending: Vec<usize> = crate::counting::prime_factors(n as u64)
            .iter()
            .map(|&l| n / l as usize)
            .collect();
        pending.sort_unstable();
        let mut saved = Vec::with_capacity(pending.len());
        let mut h = self.rem(&t, &f)?.coeffs;
        let mut scratch = Vec::with_capacity(2 * n);
        // For r >= 3 apply x -> x^q through its matrix on F_q[T]/(f): columns T^(qi).
        let matrix = (self.field.degree() >= 3).then(|| {
            let mut first = h.clone();
            self.frobenius_mod(&mut first, &f, &mut scratch);
            let first = Poly::from_raw(first);
            let mut cols = vec![self.one()];
            for i in 1..n {
                let next = self
                    .mulmod(&cols[i - 1], &first, &f)
                    .expect("monic modulus");
                cols.push(next);
            }
            cols
        });
        for k in 1..=n {
            match &matrix {
                Some(cols) => {
                    scratch.clear();
                    scratch.resize(n, 0);
                    for (&hi, col) in h.iter().zip(cols) {
                        if hi == 0 {
                            continue;
                        }
                        for (s, &c) in scratch.iter_mut().zip(&col.coeffs) {
                            *s ^= self.field.mul_raw(hi, c);
                        }
                    }
                    while scratch.last() == Some(&0) {
                        scratch.pop();
                    }
                    std::mem::swap(&mut h, &mut scratch);
                }
                None => self.frobenius_mod(&mut h, &f, &mut scratch),
            }
            if pending.contains(&k) {
                saved.push(Poly::from_raw(h.clone()));
            }
        }
        // the cheap condition first; most reducible inputs fail it
        if h != t.coeffs {
            return Ok(false);
        }
        Ok(saved
            .iter()
            .all(|hk| self.gcd(&self.add(hk, &t), &f).degree() == Some(0)))
    }

    /// T^deg(p) * p(1/T): the coefficient sequence reversed.
    pub fn reciprocal(&self, p: &Poly) -> Result<Poly> {
        if p.coeff(0) == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let mut c = p.coeffs.clone();
        c.reverse();
        Ok(Poly::from_raw(c))
    }

    pub fn is_self_reciprocal(&self, p: &Poly) -> Result<bool> {
        Ok(self.reciprocal(p)? == *p)
    }

    /// f^Q(T) = T^n f(T + 1/T) = sum_i a_i T^(n-i) (T^2 + 1)^i for monic f of degree n.
    pub fn q_transform(&self, f: &Poly) -> Result<Poly> {
        let n = match f.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut out = vec![0u64; 2 * n + 1];
        // (T^2 + 1)^i over F_2; its nonzero coefficients sit at even exponents
        let mut power = vec![1u64];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a != 0 {
                for (j, &c) in power.iter().enumerate() {
                    if c != 0 {
                        out[n - i + j] ^= self.field.mul_raw(a, c);
                    }
                }
            }
            let mut next = vec![0u64; power.len() + 2];
            for (j, &c) in power.iter().enumerate() {
                next[j] ^= c;
                next[j + 2] ^= c;
            }
            power = next;
        }
        Ok(Poly::from_raw(out))
    }

    pub fn eval(&self, p: &Poly, x: u64) -> u64 {
        p.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.mul_raw(acc, x) ^ c)
    }

    /// The monic degree-n polynomial whose low coefficients are the base-q digits of
    /// `index`, a_0 least significant.
    pub fn monic_from_index(&self, n: usize, mut index: u64) -> Poly {
        let r = self.field.degree();
        let mask = self.field.order() - 1;
        let mut coeffs = Vec::with_capacity(n + 1);
        for _ in 0..n {
            coeffs.push(index & mask);
            index = index.checked_shr(r).unwrap_or(0);
        }
        coeffs.push(1);
        Poly { coeffs }
    }

    /// All q^n monic polynomials of degree n in [`Self::monic_from_index`] order.
    pub fn enumerate_monic(
        &self,
        n: usize,
        cap: ResourceCap,
    ) -> Result<impl Iterator<Item = Poly> + '_> {
        cap.check(self.field.degree(), n as u32)?;
        let count = 1u64 << (self.field.degree() as usize * n);
        Ok((0..count).map(move |i| self.monic_from_index(n, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PolyRing {
        PolyRing::over_degree(1).unwrap()
    }

    fn f4() -> PolyRing {
        PolyRing::over_degree(2).unwrap()
    }

    #[test]
    fn arithmetic_over_f2() {
        let r = f2();
        let t1 = r.poly(&[1, 1]).unwrap();
        assert_eq!(r.mul(&t1, &t1), r.poly(&[1, 0, 1]).unwrap());
        assert_eq!(r.gcd(&r.poly(&[1, 0, 1]).unwrap(), &t1), t1);
        let m = r.poly(&[1, 1, 1]).unwrap();
        let p = r.powmod(&r.t(), &BigUint::from(4u32), &m).unwrap();
        assert_eq!(p, r.t());
    }

    #[test]
    fn divrem_by_zero() {
        let r = f2();
        assert_eq!(r.divrem(&r.t(), &Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            r.powmod(&r.t(), &BigUint::from(2u32), &Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn divrem_non_monic() {
        let r = f4();
        let a = r.poly(&[3, 2, 1, 1, 2]).unwrap();
        let b = r.poly(&[1, 3, 2]).unwrap();
        let (q, rem) = r.divrem(&a, &b).unwrap();
        assert!(rem.degree().is_none_or(|d| d < 2));
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
    }

    #[test]
    fn irreducibility_examples() {
        let r = f2();
        assert!(r.is_irreducible(&r.poly(&[1, 1, 1]).unwrap()).unwrap());
        assert!(!r.is_irreducible(&r.poly(&[1, 0, 1]).unwrap()).unwrap());
        assert!(r
            .is_irreducible(&r.poly(&[1, 1, 1, 1, 1]).unwrap())
            .unwrap());
        assert_eq!(r.is_irreducible(&r.one()), Err(Error::ConstantPolynomial));
        assert_eq!(
            r.is_irreducible(&Poly::zero()),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn packed_and_generic_rabin_agree_over_f2() {
        let r = f2();
        for n in 2..=12 {
            for idx in 0..1u64 << n {
                let p = r.monic_from_index(n, idx);
                let generic = p.coeff(0) != 0 && r.is_irreducible_generic(&p, n).unwrap();
                assert_eq!(r.is_irreducible(&p).unwrap(), generic, "{:?}", p.coeffs());
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        let r = f2();
        let p = r.poly(&[1, 1, 1]).unwrap();
        assert_eq!(r.reciprocal(&p).unwrap(), p);
        assert!(r.is_self_reciprocal(&p).unwrap());
        let c = r.poly(&[1, 1, 0, 1]).unwrap();
        assert_eq!(r.reciprocal(&c).unwrap(), r.poly(&[1, 0, 1, 1]).unwrap());
        assert!(!r.is_self_reciprocal(&c).unwrap());
        assert_eq!(r.reciprocal(&r.t()), Err(Error::ZeroConstantTerm));
        let q = f4();
        assert_eq!(
            q.reciprocal(&q.poly(&[2, 1]).unwrap()).unwrap(),
            q.poly(&[1, 2]).unwrap()
        );
    }

    #[test]
    fn q_transform_examples() {
        let r = f2();
        assert_eq!(
            r.q_transform(&r.poly(&[1, 1]).unwrap()).unwrap(),
            r.poly(&[1, 1, 1]).unwrap()
        );
        assert_eq!(
            r.q_transform(&r.poly(&[1, 1, 1]).unwrap()).unwrap(),
            r.poly(&[1, 1, 1, 1, 1]).unwrap()
        );
        let q = f4();
        assert_eq!(
            q.q_transform(&q.poly(&[2, 1]).unwrap()).unwrap(),
            q.poly(&[1, 2, 1]).unwrap()
        );
        assert_eq!(
            q.q_transform(&q.poly(&[1, 2]).unwrap()),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn enumeration_order() {
        let r = f2();
        let all: Vec<_> = r
            .enumerate_monic(1, ResourceCap::default())
            .unwrap()
            .collect();
        assert_eq!(all, vec![r.t(), r.poly(&[1, 1]).unwrap()]);
        assert_eq!(
            r.enumerate_monic(2, ResourceCap::default())
                .unwrap()
                .count(),
            4
        );
        let q = f4();
        let all: Vec<_> = q
            .enumerate_monic(2, ResourceCap::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], q.poly(&[0, 0, 1]).unwrap());
        assert_eq!(all[15], q.poly(&[3, 3, 1]).unwrap());
        assert!(q.enumerate_monic(13, ResourceCap::default()).is_err());
    }
}

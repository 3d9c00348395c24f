use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{FieldElement, FieldSpec, LinearMap};
use crate::error::{Error, ResourceCap, Result};
use crate::polyring::{Poly, PolyRing};

/// Packed tower elements must fit in one word.
pub const MAX_TOWER_BITS: u32 = 63;

/// An element of F_{q^n} = F_q[w]/(g): coordinate i (the coefficient of w^i, an
/// element of F_q) occupies bits r*i .. r*(i+1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TowerElement(pub(crate) u64);

impl TowerElement {
    pub fn packed(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The chain F_2 ⊂ F_q ⊂ F_{q^n} with q = 2^r, F_{q^n} built as a relative extension.
pub struct ExtensionTower {
    base: FieldSpec,
    n: u32,
    modulus: Poly,
    frobenius: LinearMap,
    relative_trace: LinearMap,
    absolute_trace_mask: u64,
    primitive: OnceLock<u64>,
}

impl fmt::Debug for ExtensionTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionTower")
            .field("r", &self.base.degree())
            .field("n", &self.n)
            .field("modulus", &self.modulus.coeffs())
            .finish()
    }
}

impl ExtensionTower {
    /// Builds F_{q^n} over F_q = F_{2^r}, choosing the first irreducible monic
    /// degree-n polynomial in [`PolyRing::monic_from_index`] order.
    pub fn build(r: u32, n: u32, cap: ResourceCap) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "tower needs r, n >= 1 (got r={r}, n={n})"
            )));
        }
        cap.check(r, n)?;
        if r as u64 * n as u64 > MAX_TOWER_BITS as u64 {
            return Err(Error::CapExceeded {
                requested: r as u64 * n as u64,
                cap: MAX_TOWER_BITS,
            });
        }
        let base = FieldSpec::new(r)?;
        let ring = PolyRing::new(base.clone());
        let count = base.order().pow(n);
        let modulus = (0..count)
            .map(|idx| ring.monic_from_index(n as usize, idx))
            .find(|p| ring.is_irreducible(p).unwrap_or(false))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self::with_modulus(base, modulus))
    }

    fn with_modulus(base: FieldSpec, modulus: Poly) -> Self {
        let n = modulus.degree().expect("nonzero modulus") as u32;
        let bits = base.degree() * n;
        let mut tower = ExtensionTower {
            base,
            n,
            modulus,
            frobenius: LinearMap::from_fn(0, |x| x),
            relative_trace: LinearMap::from_fn(0, |x| x),
            absolute_trace_mask: 0,
            primitive: OnceLock::new(),
        };
        let q = tower.base.order();
        let frob = LinearMap::from_fn(bits, |x| tower.pow_packed(x, q));
        tower.frobenius = frob;
        let rel = LinearMap::from_fn(bits, |x| {
            let mut acc = 0;
            let mut y = x;
            for _ in 0..n {
                acc ^= y;
                y = tower.frobenius.apply(y);
            }
            acc
        });
        tower.relative_trace = rel;
        tower.absolute_trace_mask = (0..bits)
            .filter(|&i| tower.absolute_trace_by_definition(TowerElement(1 << i)) == 1)
            .fold(0, |acc, i| acc | (1 << i));
        tower
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext_degree(&self) -> u32 {
        self.n
    }

    /// The defining polynomial g of F_{q^n} over F_q.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Total degree r*n over F_2.
    pub fn bits(&self) -> u32 {
        self.base.degree() * self.n
    }

    /// q^n.
    pub fn order(&self) -> u64 {
        1u64 << self.bits()
    }

    /// q^n - 1, the size of the unit group.
    pub fn unit_count(&self) -> u64 {
        self.order() - 1
    }

    #[inline]
    fn coord(&self, x: u64, i: u32) -> u64 {
        let r = self.base.degree();
        (x >> (r * i)) & ((1u64 << r) - 1)
    }

    pub fn from_packed(&self, x: u64) -> Result<TowerElement> {
        let bits = self.bits();
        if x >> bits != 0 {
            return Err(Error::NotInField { bits: x, m: bits });
        }
        Ok(TowerElement(x))
    }

    pub fn zero(&self) -> TowerElement {
        TowerElement(0)
    }

    pub fn one(&self) -> TowerElement {
        TowerElement(1)
    }

    /// Element with the given coordinates in the basis 1, w, ..., w^(n-1).
    pub fn element(&self, coords: &[FieldElement]) -> Result<TowerElement> {
        if coords.len() != self.n as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.n,
                coords.len()
            )));
        }
        let r = self.base.degree();
        let mut x = 0u64;
        for (i, c) in coords.iter().enumerate() {
            x |= self.base.check(*c)? << (r * i as u32);
        }
        Ok(TowerElement(x))
    }

    pub fn coords(&self, x: TowerElement) -> Vec<FieldElement> {
        (0..self.n)
            .map(|i| self.base.wrap(self.coord(x.0, i)))
            .collect()
    }

    /// The inclusion F_q -> F_{q^n}.
    pub fn embed(&self, a: FieldElement) -> Result<TowerElement> {
        Ok(TowerElement(self.base.check(a)?))
    }

    pub fn add(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        TowerElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        TowerElement(self.mul_packed(a.0, b.0))
    }

    pub fn pow(&self, a: TowerElement, e: u64) -> TowerElement {
        TowerElement(self.pow_packed(a.0, e))
    }

    pub fn inv(&self, a: TowerElement) -> Result<TowerElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(TowerElement(self.pow_packed(a.0, self.unit_count() - 1)))
    }

    /// x -> x^q.
    pub fn frobenius(&self, x: TowerElement) -> TowerElement {
        TowerElement(self.frobenius.apply(x.0))
    }

    /// Tr_{F_{q^n}/F_q}.
    pub fn relative_trace(&self, x: TowerElement) -> FieldElement {
        let t = self.relative_trace.apply(x.0);
        debug_assert!(
            t >> self.base.degree() == 0,
            "relative trace must land in F_q"
        );
        self.base.wrap(t)
    }

    /// Tr_{F_{q^n}/F_2}, via the precomputed trace functional.
    pub fn absolute_trace(&self, x: TowerElement) -> u8 {
        ((x.0 & self.absolute_trace_mask).count_ones() & 1) as u8
    }

    /// Tr_{F_{q^n}/F_2} as the sum of x^(2^i), i < r*n.
    pub fn absolute_trace_by_definition(&self, x: TowerElement) -> u8 {
        let mut acc = 0;
        let mut y = x.0;
        for _ in 0..self.bits() {
            acc ^= y;
            y = self.mul_packed(y, y);
        }
        assert!(acc <= 1, "absolute trace must land in F_2");
        acc as u8
    }

    pub fn frobenius_map(&self) -> &LinearMap {
        &self.frobenius
    }

    pub fn relative_trace_map(&self) -> &LinearMap {
        &self.relative_trace
    }

    pub fn absolute_trace_mask(&self) -> u64 {
        self.absolute_trace_mask
    }

    pub(crate) fn mul_packed(&self, a: u64, b: u64) -> u64 {
        let n = self.n as usize;
        let r = self.base.degree();
        let mut prod = [0u64; 128];
        for i in 0..n {
            let ai = self.coord(a, i as u32);
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                let bj = self.coord(b, j as u32);
                if bj != 0 {
                    prod[i + j] ^= self.base.mul_raw(ai, bj);
                }
            }
        }
        // w^n = sum g_i w^i in characteristic 2
        let g = self.modulus.coeffs();
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &gi) in g[..n].iter().enumerate() {
                if gi != 0 {
                    prod[k - n + i] ^= self.base.mul_raw(c, gi);
                }
            }
        }
        prod[..n]
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc | (c << (r * i as u32)))
    }

    pub(crate) fn pow_packed(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_packed(acc, a);
            }
            a = self.mul_packed(a, a);
            e >>= 1;
        }
        acc
    }

    /// A generator of the unit group: the first packed value whose order is q^n - 1.
    pub fn primitive_element(&self) -> TowerElement {
        TowerElement(*self.primitive.get_or_init(|| {
            let order = self.unit_count();
            let primes = crate::counting::prime_factors(order);
            (1..=u64::MAX)
                .find(|&g| primes.iter().all(|p| self.pow_packed(g, order / p) != 1))
                .expect("the unit group is cyclic")
        }))
    }

    /// Sums `f(alpha, alpha^-1)` over all units of F_{q^n}.
    pub fn sum_over_units<F>(&self, f: F) -> i128
    where
        F: Fn(u64, u64) -> i64 + Sync,
    {
        self.fold_over_units(|| 0i128, |acc, x, y| acc + f(x, y) as i128, |a, b| a + b)
    }

    /// Folds over the pairs (alpha, alpha^-1) for all units of F_{q^n}, walking powers
    /// of a generator. The walk is split into fixed chunks evaluated in parallel, each
    /// starting from `init()`; chunk results are merged with `combine` in order.
    pub fn fold_over_units<A, I, F, C>(&self, init: I, fold: F, combine: C) -> A
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(A, u64, u64) -> A + Sync,
        C: Fn(A, A) -> A + Sync,
    {
        let units = self.unit_count();
        if units == 1 {
            return fold(init(), 1, 1);
        }
        let g = self.primitive_element().0;
        let g_inv = self.pow_packed(g, units - 1);
        let step = LinearMap::from_fn(self.bits(), |x| self.mul_packed(g, x));
        let step_inv = LinearMap::from_fn(self.bits(), |x| self.mul_packed(g_inv, x));
        let chunks = (units / (1 << 14)).clamp(1, 1024);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = (c as u128 * units as u128 / chunks as u128) as u64;
                let end = ((c + 1) as u128 * units as u128 / chunks as u128) as u64;
                let mut x = self.pow_packed(g, start);
                let mut y = self.pow_packed(g_inv, start);
                let mut acc = init();
                for _ in start..end {
                    acc = fold(acc, x, y);
                    x = step.apply(x);
                    y = step_inv.apply(y);
                }
                acc
            })
            .reduce_with(&combine)
            .expect("at least one chunk")
    }
}

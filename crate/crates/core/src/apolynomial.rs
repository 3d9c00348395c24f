//! A-polynomials: the predicate, two independent counting oracles, and the
//! Q-transform iteration they seed.

use rayon::prelude::*;

use crate::counting::divisors;
use crate::error::{Error, ResourceCap, Result};
use crate::field::{ExtensionTower, LinearMap};
use crate::polyring::{Poly, PolyRing};
use crate::text::format_poly;

/// Iterates are refused beyond this degree unless the caller asks for more.
pub const DEFAULT_DEGREE_CAP: u64 = 4096;

/// The coefficients read as a_{n-1} and a_1 in T^n + a_{n-1}T^{n-1} + ... + a_1 T + a_0.
/// For n = 1 these are a_0 and the leading 1; for n = 2 both are the middle coefficient.
fn condition_coefficients(f: &Poly, n: usize) -> (u64, u64) {
    if n == 1 {
        (f.coeff(0), 1)
    } else {
        (f.coeff(n - 1), f.coeff(1))
    }
}

/// Whether Tr(a_{n-1}) = 1 and Tr(a_1/a_0) = 1, without the irreducibility requirement.
/// `f` must be monic of degree >= 1 with a_0 != 0.
pub fn trace_conditions(ring: &PolyRing, f: &Poly) -> Result<(bool, bool)> {
    let n = validate(f)?;
    let field = ring.field();
    let a0 = f.coeff(0);
    let a0_inv = field.inv_raw(a0).ok_or(Error::ZeroConstantTerm)?;
    let (top, low) = condition_coefficients(f, n);
    Ok((
        field.trace_raw(top) == 1,
        field.trace_raw(field.mul_raw(low, a0_inv)) == 1,
    ))
}

fn validate(f: &Poly) -> Result<usize> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 1 && f.coeff(0) == 0 {
        return Err(Error::MonomialT);
    }
    Ok(n)
}

/// f is an A-polynomial iff it is irreducible, Tr(a_{n-1}) = 1 and Tr(a_1/a_0) = 1.
pub fn is_a_polynomial(ring: &PolyRing, f: &Poly) -> Result<bool> {
    validate(f)?;
    if f.coeff(0) == 0 {
        // divisible by T
        return Ok(false);
    }
    let (top, low) = trace_conditions(ring, f)?;
    if !(top && low) {
        return Ok(false);
    }
    ring.is_irreducible(f)
}

/// Every monic degree-n A-polynomial over F_{2^r}, in enumeration order.
pub fn enumerate_a_polynomials(r: u32, n: u32, cap: ResourceCap) -> Result<Vec<Poly>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let ring = PolyRing::over_degree(r)?;
    cap.check(r, n)?;
    let count = 1u64 << (r * n);
    let n = n as usize;
    let start = if n == 1 { 1 } else { 0 }; // skip f = T
    (start..count)
        .into_par_iter()
        .filter_map(|idx| {
            let f = ring.monic_from_index(n, idx);
            match is_a_polynomial(&ring, &f) {
                Ok(true) => Some(Ok(f)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect()
}

/// Units α of F_{q^n} with Tr(α) = Tr(α^-1) = 1 (absolute traces). With
/// `full_degree`, only those with F_q(α) = F_{q^n}, detected as α^(q^d) != α
/// for every proper divisor d of n.
pub fn count_trace_one_units(tower: &ExtensionTower, full_degree: bool) -> u64 {
    let n = tower.ext_degree() as u64;
    let mask = tower.absolute_trace_mask();
    let frobenius_powers: Vec<LinearMap> = if full_degree {
        divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .map(|d| {
                LinearMap::from_fn(tower.bits(), |x| {
                    let mut y = x;
                    for _ in 0..d {
                        y = tower.frobenius_map().apply(y);
                    }
                    y
                })
            })
            .collect()
    } else {
        Vec::new()
    };
    let total = tower.sum_over_units(|a, a_inv| {
        let hit = (a & mask).count_ones() & 1 == 1
            && (a_inv & mask).count_ones() & 1 == 1
            && frobenius_powers.iter().all(|phi| phi.apply(a) != a);
        hit as i64
    });
    total as u64
}

/// A_r(n) from the Frobenius orbits of full degree in R*(n): |R*(n)| / n.
pub fn count_via_elements(r: u32, n: u32, cap: ResourceCap) -> Result<u64> {
    let tower = ExtensionTower::build(r, n, cap)?;
    let hits = count_trace_one_units(&tower, true);
    if !hits.is_multiple_of(n as u64) {
        return Err(Error::indivisible("element orbit count", hits, n));
    }
    Ok(hits / n as u64)
}

/// f_0, f_1 = f_0^Q, ..., f_M, each verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASeq {
    r: u32,
    n: usize,
    iterates: Vec<Poly>,
}

impl ASeq {
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Degree of the seed.
    pub fn seed_degree(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> &Poly {
        &self.iterates[0]
    }

    pub fn iterates(&self) -> &[Poly] {
        &self.iterates
    }
}

/// Applies the Q-transform `iterations` times to an A-polynomial seed, checking that
/// every iterate is monic, irreducible, of degree n*2^m and (for m >= 1) self-reciprocal.
pub fn q_iterate(ring: &PolyRing, seed: &Poly, iterations: u32, degree_cap: u64) -> Result<ASeq> {
    let is_seed = match is_a_polynomial(ring, seed) {
        Ok(v) => v,
        Err(Error::MonomialT) => false,
        Err(e) => return Err(e),
    };
    if !is_seed {
        return Err(Error::NotAPolynomial {
            seed: format_poly(seed),
        });
    }
    let n = seed.degree().expect("validated");
    let final_degree = (n as u64)
        .checked_shl(iterations)
        .filter(|d| d >> iterations == n as u64);
    match final_degree {
        Some(d) if d <= degree_cap => {}
        _ => {
            return Err(Error::DegreeCapExceeded {
                degree: final_degree.unwrap_or(u64::MAX),
                cap: degree_cap,
            })
        }
    }
    let mut iterates = vec![seed.clone()];
    for step in 1..=iterations as usize {
        let next = ring.q_transform(iterates.last().expect("nonempty"))?;
        let fail = |reason: String| Error::IterationFailed { step, reason };
        let expected = n << step;
        if next.degree() != Some(expected) {
            return Err(fail(format!(
                "degree {:?}, expected {expected}",
                next.degree()
            )));
        }
        if !next.is_monic() {
            return Err(fail("not monic".into()));
        }
        if !ring.is_self_reciprocal(&next)? {
            return Err(fail("not self-reciprocal".into()));
        }
        if !ring.is_irreducible(&next)? {
            return Err(fail("reducible".into()));
        }
        iterates.push(next);
    }
    Ok(ASeq {
        r: ring.field().degree(),
        n,
        iterates,
    })
}

//! Point counts of the elliptic function field y^2 + y = x + 1/x over F_{q^n},
//! computed by scanning x and compared with the L-polynomial prediction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::counting::{divisors, moebius, rational_place_count};
use crate::error::{Error, ResourceCap, Result};
use crate::field::ExtensionTower;

/// Places of degree one lying over the zero and the pole of x (both ramified).
pub const RAMIFIED_PLACES: u64 = 2;

/// Solutions (x, y) ∈ F_{q^n}^* × F_{q^n} of y^2 + y = x + 1/x. For each x there are
/// two solutions when Tr(x + 1/x) = 0 and none otherwise.
pub fn count_affine(tower: &ExtensionTower) -> u64 {
    let mask = tower.absolute_trace_mask();
    let solutions = tower.sum_over_units(|x, x_inv| {
        if ((x ^ x_inv) & mask).count_ones() & 1 == 0 {
            2
        } else {
            0
        }
    });
    solutions as u64
}

/// Degree-one places over F_{2^(rn)}: the affine count plus the two ramified places,
/// checked against q^n + 1 - α^(rn) - ᾱ^(rn).
pub fn rational_places(r: u32, n: u32, cap: ResourceCap) -> Result<u64> {
    let tower = ExtensionTower::build(r, n, cap)?;
    let scanned = count_affine(&tower) + RAMIFIED_PLACES;
    let predicted = rational_place_count(r, n as u64);
    if BigInt::from(scanned) != predicted {
        return Err(Error::ZetaMismatch {
            rn: r as u64 * n as u64,
            scanned: scanned.to_string(),
            predicted: predicted.to_string(),
        });
    }
    Ok(scanned)
}

/// Degree-n places by Möbius inversion of scanned rational place counts over the
/// subfields F_{q^d}, d | n.
pub fn degree_place_count(r: u32, n: u32, cap: ResourceCap) -> Result<BigInt> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidArgument("r and n must be >= 1".into()));
    }
    cap.check(r, n)?;
    let n64 = n as u64;
    let mut sum = BigInt::zero();
    for d in divisors(n64) {
        let places = rational_places(r, d as u32, cap)?;
        sum += moebius(n64 / d) as i64 * BigInt::from(places);
    }
    let (quot, rem) = sum.div_rem(&BigInt::from(n64));
    if !rem.is_zero() {
        return Err(Error::indivisible("degree place count", sum, n64));
    }
    Ok(quot)
}

//! The exhaustive property suites, shared by the per-module test targets and by the
//! acceptance target. Each returns a description of the first violation.

use std::collections::HashSet;

use apoly_core::charsums::{all_characters, Character};
use apoly_core::{ExtensionTower, FieldSpec, PolyRing, ResourceCap};

pub type SuiteResult = Result<String, String>;

/// (r, n) with r*n <= bits.
pub fn towers_up_to(bits: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=bits).flat_map(move |r| (1..=bits / r).map(move |n| (r, n)))
}

/// #{a ∈ F_{2^m} : Tr(a) = 1} = 2^(m-1) for m <= 16.
pub fn trace_balance() -> SuiteResult {
    for m in 1..=16u32 {
        let f = FieldSpec::new(m).unwrap();
        let ones = (0..f.order()).filter(|&a| f.trace_raw(a) == 1).count() as u64;
        if ones != f.order() / 2 {
            return Err(format!("m={m}: {ones} elements of trace 1"));
        }
        if m <= 12 {
            if let Some(a) =
                (0..f.order()).find(|&a| f.trace_raw(a) != f.trace_by_definition_raw(a))
            {
                return Err(format!("m={m}: trace functional disagrees at {a}"));
            }
        }
    }
    Ok("m <= 16".into())
}

/// Tr_{q^n/2} = Tr_{q/2} ∘ Tr_{q^n/q} pointwise for r*n <= 16.
pub fn trace_transitivity() -> SuiteResult {
    let mut cells = 0;
    for (r, n) in towers_up_to(16) {
        let t = ExtensionTower::build(r, n, ResourceCap::default()).unwrap();
        let base = t.base();
        for x in 0..t.order() {
            let x = t.from_packed(x).unwrap();
            let composed = base.trace(t.relative_trace(x)).unwrap();
            if t.absolute_trace(x) != composed {
                return Err(format!("r={r} n={n} x={}", x.packed()));
            }
            if r * n <= 12 && t.absolute_trace_by_definition(x) != composed {
                return Err(format!(
                    "r={r} n={n} x={}: definition disagrees",
                    x.packed()
                ));
            }
        }
        cells += 1;
    }
    Ok(format!("{cells} towers with rn <= 16"))
}

/// Tr(c) = 0 iff c = γ^2 + γ, for r*n <= 16.
pub fn hilbert_90() -> SuiteResult {
    let mut cells = 0;
    for (r, n) in towers_up_to(16) {
        let t = ExtensionTower::build(r, n, ResourceCap::default()).unwrap();
        let image: HashSet<u64> = (0..t.order())
            .map(|g| {
                let g = t.from_packed(g).unwrap();
                t.add(t.mul(g, g), g).packed()
            })
            .collect();
        for c in 0..t.order() {
            let trace_zero = t.absolute_trace(t.from_packed(c).unwrap()) == 0;
            if trace_zero != image.contains(&c) {
                return Err(format!("r={r} n={n} c={c}"));
            }
        }
        cells += 1;
    }
    Ok(format!("{cells} towers with rn <= 16"))
}

/// Rabin agrees with trial division on every monic polynomial with q^deg <= 2^16.
pub fn rabin_vs_trial_division() -> SuiteResult {
    let mut checked = 0u64;
    for (r, n) in towers_up_to(16) {
        let ring = PolyRing::over_degree(r).unwrap();
        for p in ring
            .enumerate_monic(n as usize, ResourceCap::new(16))
            .unwrap()
        {
            if ring.is_irreducible(&p).unwrap() != super::irreducible_by_trial_division(&ring, &p) {
                return Err(format!("r={r} p={:?}", p.coeffs()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} polynomials"))
}

/// f^Q is monic, self-reciprocal, of degree 2 deg f with f^Q(0) = 1, for every monic f
/// of degree <= 8 over F_2 and F_4.
pub fn q_transform_structure() -> SuiteResult {
    let mut checked = 0u64;
    for r in [1u32, 2] {
        let ring = PolyRing::over_degree(r).unwrap();
        for n in 1..=8usize {
            for f in ring.enumerate_monic(n, ResourceCap::new(16)).unwrap() {
                let g = ring.q_transform(&f).unwrap();
                let ok = g.degree() == Some(2 * n)
                    && g.is_monic()
                    && g.coeff(0) == 1
                    && ring.is_self_reciprocal(&g).unwrap();
                if !ok {
                    return Err(format!("r={r} f={:?}", f.coeffs()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} polynomials"))
}

/// sum_{a ∈ F_q} χ(ua) = q [u = 0] for every nontrivial χ and every u, q <= 16; the
/// q characters are pairwise distinct.
pub fn character_orthogonality() -> SuiteResult {
    for r in 1..=4u32 {
        let f = FieldSpec::new(r).unwrap();
        let q = f.order() as i64;
        let chars = all_characters(&f);
        let tables: HashSet<Vec<i64>> = chars
            .iter()
            .map(|chi| f.elements().map(|u| chi.eval(&f, u).unwrap()).collect())
            .collect();
        if tables.len() != chars.len() {
            return Err(format!("r={r}: characters are not distinct"));
        }
        for chi in chars.iter().filter(|c| !c.is_trivial()) {
            for u in f.elements() {
                let sum: i64 = f
                    .elements()
                    .map(|a| chi.eval(&f, f.mul(u, a).unwrap()).unwrap())
                    .sum();
                let expected = if u.is_zero() { q } else { 0 };
                if sum != expected {
                    return Err(format!("r={r} c={} u={}: sum {sum}", chi.twist(), u));
                }
            }
        }
        let trivial = Character::trivial(&f);
        if f.elements().any(|u| trivial.eval(&f, u).unwrap() != 1) {
            return Err(format!("r={r}: trivial character is not constant"));
        }
    }
    Ok("q <= 16".into())
}

//! Additive characters of F_q, Kloosterman sums over F_{q^n}, and the weighted
//! Kloosterman average compared against A-polynomial counts.
//!
//! Characters are χ_c(u) = (-1)^Tr(cu) for a twist c ∈ F_q. The lift to F_{q^n}
//! is χ_c^(n)(u) = χ_c(Tr_{F_{q^n}/F_q}(u)). In characteristic 2 all values are
//! ±1, so every sum here is an integer.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::apolynomial::count_trace_one_units;
use crate::counting::{count_formula, divisors, moebius};
use crate::error::{Error, ResourceCap, Result};
use crate::field::{ExtensionTower, FieldElement, FieldSpec, LinearMap, TowerElement};

/// Characters checked per cell when q exceeds [`EXHAUSTIVE_CHARACTER_LIMIT`].
pub const DEFAULT_CHARACTER_SAMPLE: usize = 16;

/// Largest q for which every nontrivial character is checked by default.
pub const EXHAUSTIVE_CHARACTER_LIMIT: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Character {
    twist: FieldElement,
}

#[inline]
fn sign(bit: u8) -> i64 {
    1 - 2 * bit as i64
}

impl Character {
    pub fn new(twist: FieldElement) -> Self {
        Character { twist }
    }

    pub fn trivial(field: &FieldSpec) -> Self {
        Character::new(field.zero())
    }

    pub fn twist(&self) -> FieldElement {
        self.twist
    }

    pub fn is_trivial(&self) -> bool {
        self.twist.is_zero()
    }

    /// χ_c(u) = (-1)^Tr(cu) for u ∈ F_q.
    pub fn eval(&self, field: &FieldSpec, u: FieldElement) -> Result<i64> {
        Ok(sign(field.trace(field.mul(self.twist, u)?)?))
    }

    /// χ_c^(n)(u) = χ_c(Tr_{F_{q^n}/F_q}(u)) for u ∈ F_{q^n}.
    pub fn eval_lifted(&self, tower: &ExtensionTower, u: TowerElement) -> Result<i64> {
        self.eval(tower.base(), tower.relative_trace(u))
    }
}

/// The q characters of F_q, indexed by twist in increasing order (χ_0 first).
pub fn all_characters(field: &FieldSpec) -> Vec<Character> {
    field.elements().map(Character::new).collect()
}

fn scaling_map(tower: &ExtensionTower, a: FieldElement) -> Result<LinearMap> {
    let a = tower.embed(a)?;
    Ok(LinearMap::from_fn(tower.bits(), |x| {
        tower.mul(a, TowerElement(x)).packed()
    }))
}

/// K(χ^(n); a, b) = sum over α ∈ F_{q^n}^* of χ^(n)(aα + bα^-1), by exhaustive summation.
pub fn kloosterman(
    tower: &ExtensionTower,
    a: FieldElement,
    b: FieldElement,
    chi: Character,
) -> Result<BigInt> {
    let base = tower.base();
    let c = base.check(chi.twist)?;
    let scale_a = scaling_map(tower, a)?;
    let scale_b = scaling_map(tower, b)?;
    let rel = tower.relative_trace_map();
    let total = tower.sum_over_units(|alpha, alpha_inv| {
        let u = scale_a.apply(alpha) ^ scale_b.apply(alpha_inv);
        sign(base.trace_raw(base.mul_raw(c, rel.apply(u))))
    });
    Ok(BigInt::from(total))
}

/// In-place Walsh-Hadamard transform over Z.
fn walsh_hadamard(values: &mut [i64]) {
    let mut h = 1;
    while h < values.len() {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*x + *y, *x - *y);
                *x = s;
                *y = d;
            }
        }
        h *= 2;
    }
}

fn require_nontrivial(chi: Character) -> Result<()> {
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    Ok(())
}

fn divide_by_q_squared(total: BigInt, q: u64) -> Result<BigInt> {
    let q2 = BigInt::from(q) * q;
    let (quot, rem) = total.div_rem(&q2);
    if !rem.is_zero() {
        return Err(Error::indivisible("weighted Kloosterman sum", total, q2));
    }
    Ok(quot)
}

/// Evaluates the weighted average (1/q^2) sum_{u ∈ F_q} χ(u) sum_{a+b=u} K(χ^(n); a, b)
/// for many characters of one tower.
///
/// With χ(a+b) = χ(a)χ(b) the double sum regroups per α into
/// sum_α P_χ(Tr(α)) P_χ(Tr(α^-1)), where Tr is the trace to F_q and
/// P_χ(s) = sum_{a ∈ F_q} χ(a) χ(as). The joint distribution of (Tr(α), Tr(α^-1))
/// does not depend on χ and is collected once.
pub struct KloostermanAverager {
    base: FieldSpec,
    /// The nonzero values of W(v) = sum_{a ∈ F_q} (-1)^Tr(va), so that
    /// P_{χ_c}(s) = W(c(1 + s)).
    walsh_support: Vec<(u64, i64)>,
    /// Multiplicity of each pair (Tr(α), Tr(α^-1)).
    trace_pairs: HashMap<(u64, u64), u64>,
}

impl KloostermanAverager {
    pub fn new(tower: &ExtensionTower) -> Self {
        let base = tower.base().clone();
        // spectrum[w] = sum_a (-1)^<a, w>, and Tr(va) = <a, trace_form_mask(v)>
        let mut spectrum = vec![1i64; base.order() as usize];
        walsh_hadamard(&mut spectrum);
        let mask = LinearMap::from_fn(base.degree(), |v| base.trace_form_mask(v));
        let walsh_support = (0..base.order())
            .map(|v| (v, spectrum[mask.apply(v) as usize]))
            .filter(|&(_, w)| w != 0)
            .collect();
        let rel = tower.relative_trace_map();
        let trace_pairs = tower.fold_over_units(
            HashMap::new,
            |mut map: HashMap<(u64, u64), u64>, a, a_inv| {
                *map.entry((rel.apply(a), rel.apply(a_inv))).or_default() += 1;
                map
            },
            |mut left, right| {
                for (k, v) in right {
                    *left.entry(k).or_default() += v;
                }
                left
            },
        );
        KloostermanAverager {
            base,
            walsh_support,
            trace_pairs,
        }
    }

    pub fn average(&self, chi: Character) -> Result<BigInt> {
        require_nontrivial(chi)?;
        let c = self.base.check(chi.twist)?;
        let c_inv = self.base.inv_raw(c).ok_or(Error::DivisionByZero)?;
        // the s with P(s) != 0, and P(s)
        let nonzero: Vec<(u64, i128)> = self
            .walsh_support
            .iter()
            .map(|&(v, w)| (1 ^ self.base.mul_raw(c_inv, v), w as i128))
            .collect();
        let mut total = 0i128;
        for &(s, ps) in &nonzero {
            for &(t, pt) in &nonzero {
                if let Some(&count) = self.trace_pairs.get(&(s, t)) {
                    total += count as i128 * ps * pt;
                }
            }
        }
        divide_by_q_squared(BigInt::from(total), self.base.order())
    }
}

/// (1/q^2) sum_{u ∈ F_q} χ(u) sum_{a+b=u} K(χ^(n); a, b), via [`KloostermanAverager`].
pub fn lhs_average(tower: &ExtensionTower, chi: Character) -> Result<BigInt> {
    require_nontrivial(chi)?;
    KloostermanAverager::new(tower).average(chi)
}

/// The same average as [`lhs_average`], summed literally: one exhaustive Kloosterman
/// sum per pair (a, b = u + a). Costs q^2 (q^n - 1) character evaluations.
pub fn lhs_average_direct(tower: &ExtensionTower, chi: Character) -> Result<BigInt> {
    require_nontrivial(chi)?;
    let base = tower.base();
    let mut total = BigInt::zero();
    for u in base.elements() {
        let weight = chi.eval(base, u)?;
        for a in base.elements() {
            let b = base.add(u, a)?;
            total += weight * kloosterman(tower, a, b, chi)?;
        }
    }
    divide_by_q_squared(total, base.order())
}

/// sum_{d | n} μ(n/d) d A_r(d), with A_r from the closed formula.
pub fn stated_rhs(r: u32, n: u32) -> Result<BigInt> {
    let n = n as u64;
    let mut acc = BigInt::zero();
    for d in divisors(n) {
        acc += moebius(n / d) as i64 * count_formula(r, d as u32)? * d;
    }
    Ok(acc)
}

/// sum over d | n with n/d odd of d A_r(d). An element of degree d over F_q has
/// absolute trace in F_{q^n} equal to (n/d) times its trace in F_{q^d}, so this
/// is |R(n)|, the number of units of F_{q^n} with Tr(α) = Tr(α^-1) = 1.
pub fn trace_one_units_formula(r: u32, n: u32) -> Result<BigInt> {
    let n = n as u64;
    let mut acc = BigInt::zero();
    for d in divisors(n).into_iter().filter(|d| (n / d) % 2 == 1) {
        acc += count_formula(r, d as u32)? * d;
    }
    Ok(acc)
}

/// |R(n)|: units with absolute trace 1 and inverse of absolute trace 1.
pub fn r_count(tower: &ExtensionTower) -> u64 {
    count_trace_one_units(tower, false)
}

/// |R*(n)|: the members of R(n) generating F_{q^n} over F_q.
pub fn r_star_count(tower: &ExtensionTower) -> u64 {
    count_trace_one_units(tower, true)
}

/// Units with Tr_{F_{q^n}/F_q}(α) = Tr_{F_{q^n}/F_q}(α^-1) = 1.
pub fn relative_trace_one_count(tower: &ExtensionTower) -> u64 {
    let rel = tower.relative_trace_map();
    tower.sum_over_units(|a, a_inv| (rel.apply(a) == 1 && rel.apply(a_inv) == 1) as i64) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVerdict {
    pub twist: u64,
    pub lhs: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KloostermanReport {
    pub r: u32,
    pub n: u32,
    /// sum_{d | n} μ(n/d) d A_r(d).
    pub rhs: BigInt,
    pub characters: Vec<CharacterVerdict>,
    /// Whether every nontrivial character was checked.
    pub exhaustive: bool,
    /// |R(n)| by element scan.
    pub r_count: u64,
    /// |R(n)| predicted from the A_r counts.
    pub r_count_formula: BigInt,
}

impl KloostermanReport {
    pub fn pass(&self) -> bool {
        self.characters.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CharacterVerdict> {
        self.characters.iter().filter(|c| !c.pass)
    }
}

/// Checks lhs_average(χ) = sum_{d | n} μ(n/d) d A_r(d) for the nontrivial characters of
/// F_{2^r}: all of them when q <= 256 (or when `max_characters` allows), otherwise
/// the first `max_characters` twists (default [`DEFAULT_CHARACTER_SAMPLE`]).
pub fn verify_kloosterman_identity(
    r: u32,
    n: u32,
    cap: ResourceCap,
    max_characters: Option<usize>,
) -> Result<KloostermanReport> {
    let tower = ExtensionTower::build(r, n, cap)?;
    let base = tower.base();
    let nontrivial = base.order() as usize - 1;
    let limit = match max_characters {
        Some(k) => k.min(nontrivial),
        None if base.order() <= EXHAUSTIVE_CHARACTER_LIMIT => nontrivial,
        None => DEFAULT_CHARACTER_SAMPLE.min(nontrivial),
    };
    let rhs = stated_rhs(r, n)?;
    let averager = KloostermanAverager::new(&tower);
    let characters = (1..=limit as u64)
        .map(|c| {
            let chi = Character::new(base.element(c)?);
            let lhs = averager.average(chi)?;
            Ok(CharacterVerdict {
                twist: c,
                pass: lhs == rhs,
                lhs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KloostermanReport {
        r,
        n,
        rhs,
        exhaustive: limit == nontrivial,
        characters,
        r_count: r_count(&tower),
        r_count_formula: trace_one_units_formula(r, n)?,
    })
}

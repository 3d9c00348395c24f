//! Construction, enumeration and counting of A-polynomials over F_{2^r}.
//!
//! An A-polynomial is a monic irreducible f = T^n + a_{n-1}T^{n-1} + ... + a_0 over
//! F_{2^r} with Tr(a_{n-1}) = 1 and Tr(a_1/a_0) = 1. Iterating the Q-transform
//! f ↦ T^deg f · f(T + 1/T) from such a seed yields self-reciprocal irreducible
//! polynomials of degree n·2^m.
//!
//! Every count is computed exactly, and each closed form has an exhaustive oracle
//! next to it: a polynomial scan, a Frobenius-orbit scan, a curve point count.

pub mod apolynomial;
pub mod charsums;
pub mod counting;
pub mod curve;
mod error;
pub mod field;
pub mod gf2x;
pub mod polyring;
pub mod text;

pub use error::{Error, ResourceCap, Result};
pub use field::{ExtensionTower, FieldElement, FieldSpec, TowerElement};
pub use polyring::{Poly, PolyRing};

//! Text encodings shared by the library and the CLI.
//!
//! * field element: a decimal integer below 2^m, bit i = coefficient of z^i;
//! * polynomial: comma-separated field elements, constant term first
//!   (`"1,1,1"` is T^2+T+1 over F_2, `"2,1"` is T+z over F_4), `"0"` is zero;
//! * tower element: exactly n comma-separated base-field integers, constant
//!   coordinate first.

use thiserror::Error;

use crate::field::{ExtensionTower, FieldElement, FieldSpec, TowerElement};
use crate::polyring::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid integer {0:?}")]
    InvalidInteger(String),
    #[error("{value} does not fit in {bits} bits")]
    OutOfRange { value: u64, bits: u32 },
    #[error("expected {expected} coordinates, found {found}")]
    WrongLength { expected: usize, found: usize },
}

fn parse_coefficient(token: &str, bits: u32) -> Result<u64, ParseError> {
    let token = token.trim();
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::InvalidInteger(token.to_string()));
    }
    let value: u64 = token
        .parse()
        .map_err(|_| ParseError::InvalidInteger(token.to_string()))?;
    if bits < 64 && value >> bits != 0 {
        return Err(ParseError::OutOfRange { value, bits });
    }
    Ok(value)
}

fn parse_list(s: &str, bits: u32) -> Result<Vec<u64>, ParseError> {
    if s.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    s.split(',').map(|t| parse_coefficient(t, bits)).collect()
}

pub fn parse_field_element(s: &str, field: &FieldSpec) -> Result<FieldElement, ParseError> {
    if s.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let v = parse_coefficient(s, field.degree())?;
    Ok(field.element(v).expect("range checked"))
}

pub fn format_field_element(a: FieldElement) -> String {
    a.bits().to_string()
}

/// Parses a polynomial over `field`. Trailing zero coefficients are dropped.
pub fn parse_poly(s: &str, field: &FieldSpec) -> Result<Poly, ParseError> {
    Ok(Poly::from_raw(parse_list(s, field.degree())?))
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = p.coeffs().iter().map(u64::to_string).collect();
    parts.join(",")
}

pub fn parse_tower_element(s: &str, tower: &ExtensionTower) -> Result<TowerElement, ParseError> {
    let base = tower.base();
    let coords = parse_list(s, base.degree())?;
    let n = tower.ext_degree() as usize;
    if coords.len() != n {
        return Err(ParseError::WrongLength {
            expected: n,
            found: coords.len(),
        });
    }
    let elems: Vec<FieldElement> = coords
        .into_iter()
        .map(|c| base.element(c).expect("range checked"))
        .collect();
    Ok(tower.element(&elems).expect("coordinates validated"))
}

pub fn format_tower_element(x: TowerElement, tower: &ExtensionTower) -> String {
    let parts: Vec<String> = tower
        .coords(x)
        .iter()
        .map(|c| c.bits().to_string())
        .collect();
    parts.join(",")
}

#![no_main]

use apoly_core::text::{format_poly, parse_poly};
use apoly_core::FieldSpec;
use libfuzzer_sys::fuzz_target;

// first byte picks F_{2^r}, the rest is the text
fuzz_target!(|data: &[u8]| {
    let Some((&r, text)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(text) else {
        return;
    };
    let field = FieldSpec::new(1 + r as u32 % 63).unwrap();
    if let Ok(p) = parse_poly(text, &field) {
        assert!(p.coeffs().iter().all(|&c| field.contains_raw(c)));
        assert!(p.is_zero() || p.leading() != 0);
        let again = parse_poly(&format_poly(&p), &field).unwrap();
        assert_eq!(again, p);
    }
});

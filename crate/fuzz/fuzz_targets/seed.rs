#![no_main]

use apoly_core::apolynomial::{is_a_polynomial, q_iterate};
use apoly_core::text::parse_poly;
use apoly_core::{Error, PolyRing};
use libfuzzer_sys::fuzz_target;

// the path of `apoly construct --seed`: parse, test, iterate twice
fuzz_target!(|data: &[u8]| {
    let Some((&r, text)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(text) else {
        return;
    };
    let ring = PolyRing::over_degree(1 + r as u32 % 4).unwrap();
    let Ok(f) = parse_poly(text, ring.field()) else {
        return;
    };
    if f.degree().is_none_or(|d| d > 12) {
        return;
    }
    let seed = matches!(is_a_polynomial(&ring, &f), Ok(true));
    match q_iterate(&ring, &f, 2, 64) {
        Ok(seq) => {
            assert!(seed);
            assert_eq!(seq.iterates().len(), 3);
        }
        Err(Error::NotAPolynomial { .. } | Error::ConstantPolynomial | Error::NotMonic) => {
            assert!(!seed)
        }
        Err(e) => panic!("{e}"),
    }
});

#![no_main]

use apoly_core::text::{format_field_element, parse_field_element};
use apoly_core::FieldSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&r, text)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(text) else {
        return;
    };
    let field = FieldSpec::new(1 + r as u32 % 63).unwrap();
    if let Ok(a) = parse_field_element(text, &field) {
        assert!(field.contains_raw(a.bits()));
        let again = parse_field_element(&format_field_element(a), &field).unwrap();
        assert_eq!(again, a);
    }
});

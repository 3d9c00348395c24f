#![no_main]

use std::sync::OnceLock;

use apoly_core::text::{format_tower_element, parse_tower_element};
use apoly_core::{ExtensionTower, ResourceCap};
use libfuzzer_sys::fuzz_target;

static TOWERS: [OnceLock<ExtensionTower>; 32] = [const { OnceLock::new() }; 32];

// two bytes pick r <= 8 and n <= 4
fuzz_target!(|data: &[u8]| {
    let [r, n, text @ ..] = data else { return };
    let Ok(text) = std::str::from_utf8(text) else {
        return;
    };
    let (r, n) = (1 + *r as u32 % 8, 1 + *n as u32 % 4);
    let tower = TOWERS[((r - 1) * 4 + n - 1) as usize]
        .get_or_init(|| ExtensionTower::build(r, n, ResourceCap::new(32)).unwrap());
    if let Ok(x) = parse_tower_element(text, tower) {
        assert!(x.packed() < tower.order());
        let again = parse_tower_element(&format_tower_element(x, tower), tower).unwrap();
        assert_eq!(again, x);
    }
});

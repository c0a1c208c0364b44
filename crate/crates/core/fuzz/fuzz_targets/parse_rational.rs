#![no_main]

use graphtile::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        let printed = format_rational(&q);
        assert_eq!(parse_rational(&printed).expect("formatted rational reparses"), q);
    }
});

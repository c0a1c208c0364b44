#![no_main]

use graphtile::Graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = text.parse::<Graph>() {
        let again: Graph = g.to_text().parse().expect("formatted graph reparses");
        assert_eq!(again, g);
    }
});

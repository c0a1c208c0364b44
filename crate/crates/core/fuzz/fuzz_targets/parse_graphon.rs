#![no_main]

use graphtile::StepGraphon;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = text.parse::<StepGraphon>() {
        let again: StepGraphon = w.to_text().parse().expect("formatted graphon reparses");
        assert_eq!(again, w);
    }
});

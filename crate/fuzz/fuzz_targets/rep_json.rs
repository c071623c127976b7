#![no_main]
use libfuzzer_sys::fuzz_target;
use strandkit_geom::json::{rep_from_json, rep_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rep) = rep_from_json(text) {
        let again = rep_from_json(&rep_to_json(&rep)).expect("own output parses");
        assert_eq!(rep, again);
    }
});

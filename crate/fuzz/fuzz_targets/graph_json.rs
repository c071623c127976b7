#![no_main]
use libfuzzer_sys::fuzz_target;
use strandkit_graph::io::{graph_to_json, parse_graph_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((g, rot)) = parse_graph_json(text) {
        let again = graph_to_json(&g, rot.as_ref());
        let (h, rot2) = parse_graph_json(&again).expect("own output parses");
        assert_eq!(g.edges(), h.edges());
        assert_eq!(rot.map(|r| r.orders().to_vec()), rot2.map(|r| r.orders().to_vec()));
    }
});

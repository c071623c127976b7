#![no_main]
use libfuzzer_sys::fuzz_target;
use strandkit_graph::io::{graph_to_edge_list, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        let h = parse_edge_list(&graph_to_edge_list(&g)).expect("own output parses");
        let (mut a, mut b) = (g.edges(), h.edges());
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
});

//! Edge-list parser: arbitrary text must either parse cleanly or error,
//! never panic; anything that parses must satisfy the graph invariants and
//! survive a write/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;

fn canonical_edges(net: &bigraph::OneModeNetwork) -> Vec<(String, String)> {
    let mut edges: Vec<(String, String)> = net
        .edges()
        .map(|(i, j)| {
            let a = net.label(i).to_string();
            let b = net.label(j).to_string();
            (a.clone().min(b.clone()), a.max(b))
        })
        .collect();
    edges.sort();
    edges
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(net) = bigraph::load_edge_list(text) else {
        return;
    };

    assert!(net.edge_count() >= 1, "parser must reject edgeless input");
    for (i, j) in net.edges() {
        assert!(i < j, "edges come out ordered");
        assert!(j < net.node_count(), "dense ids stay in range");
        assert!(net.has_edge(j, i), "adjacency is symmetric");
        assert!(!net.has_edge(i, i), "no self-loops");
    }

    let rendered = bigraph::write_edge_list(&net);
    let reparsed = bigraph::load_edge_list(&rendered).expect("writer output must parse");
    assert_eq!(canonical_edges(&net), canonical_edges(&reparsed));
});

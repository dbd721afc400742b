//! Coordinate-list parser: no panics on arbitrary input; parsed memberships
//! keep both id spaces dense and survive a write/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;

fn label_pairs(bip: &bigraph::TwoModeNetwork) -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> = bip
        .memberships()
        .map(|(a, g)| {
            (
                bip.agent_labels()[a].clone(),
                bip.group_labels()[g].clone(),
            )
        })
        .collect();
    pairs.sort();
    pairs
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(bip) = bigraph::read_coordinate_list(text) else {
        return;
    };

    for (a, g) in bip.memberships() {
        assert!(a < bip.agent_count());
        assert!(g < bip.group_count());
    }
    // the sparse format names only members, so nothing can be isolated
    assert_eq!(bip.isolate_count(), 0);

    let Ok(rendered) = bigraph::write_coordinate_list(&bip) else {
        return;
    };
    let reparsed =
        bigraph::read_coordinate_list(&rendered).expect("writer output must parse");
    assert_eq!(label_pairs(&bip), label_pairs(&reparsed));
});

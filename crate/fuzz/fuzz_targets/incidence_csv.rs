//! Incidence-CSV parser: no panics on arbitrary input, and everything that
//! parses re-writes idempotently (write -> read -> write is byte-stable).

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(bip) = bigraph::read_incidence(text) else {
        return;
    };

    let (agent_deg, group_deg) = bigraph::degrees(&bip);
    let total: usize = agent_deg.iter().sum();
    assert_eq!(total, group_deg.iter().sum::<usize>());
    assert_eq!(total, bip.membership_count());

    // foreign labels may be unwritable (e.g. contain quotes); that is an
    // error, not a panic
    let Ok(rendered) = bigraph::write_incidence(&bip) else {
        return;
    };
    let reparsed = bigraph::read_incidence(&rendered).expect("writer output must parse");
    assert_eq!(reparsed, bip);
    assert_eq!(
        bigraph::write_incidence(&reparsed).expect("reparsed network must write"),
        rendered
    );
});

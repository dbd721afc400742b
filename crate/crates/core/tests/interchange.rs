//! Interchange-format checks on generated data at full experiment scale.

use bigraph::*;

#[test]
fn karate_scale_incidence_round_trips_byte_identically() {
    let net = karate_club();
    let cfg = ModelConfig::new(Model::Teams, 0.8, 1000, 7);
    let bip = generate_two_mode(&net, &cfg).unwrap();
    assert_eq!(bip.agent_count(), 34);
    assert_eq!(bip.group_count(), 1000);

    let first = write_incidence(&bip).unwrap();
    let parsed = read_incidence(&first).unwrap();
    assert_eq!(parsed, bip);
    let second = write_incidence(&parsed).unwrap();
    assert_eq!(first, second, "incidence CSV must round-trip byte-identically");
}

#[test]
fn generated_memberships_survive_the_coordinate_list() {
    let net = karate_club();
    let cfg = ModelConfig::new(Model::Clubs, 0.9, 50, 3);
    let bip = generate_two_mode(&net, &cfg).unwrap();

    let text = write_coordinate_list(&bip).unwrap();
    let back = read_coordinate_list(&text).unwrap();
    let label_pairs = |b: &TwoModeNetwork| {
        let mut pairs: Vec<(String, String)> = b
            .memberships()
            .map(|(a, g)| (b.agent_labels()[a].clone(), b.group_labels()[g].clone()))
            .collect();
        pairs.sort();
        pairs
    };
    assert_eq!(label_pairs(&back), label_pairs(&bip));
}

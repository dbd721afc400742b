//! Binary agent x group networks: degrees, four-cycle counts, one-mode
//! projection, and the incidence-CSV / coordinate-list interchange formats.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Binary two-mode (agent x group) membership structure.
///
/// Immutable after construction. Agent and group ids are dense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoModeNetwork {
    agent_count: usize,
    group_count: usize,
    agent_groups: Vec<Vec<usize>>,
    agent_labels: Vec<String>,
    group_labels: Vec<String>,
}

impl TwoModeNetwork {
    /// Empty network with id-derived labels (`"0"..`, `"g0"..`).
    pub fn new(agent_count: usize, group_count: usize) -> Self {
        Self {
            agent_count,
            group_count,
            agent_groups: vec![Vec::new(); agent_count],
            agent_labels: (0..agent_count).map(|i| i.to_string()).collect(),
            group_labels: (0..group_count).map(|g| format!("g{g}")).collect(),
        }
    }

    pub fn from_memberships(
        agent_count: usize,
        group_count: usize,
        memberships: &[(usize, usize)],
    ) -> Result<Self> {
        let mut net = Self::new(agent_count, group_count);
        net.insert_all(memberships)?;
        Ok(net)
    }

    pub fn with_labels(
        agent_labels: Vec<String>,
        group_labels: Vec<String>,
        memberships: &[(usize, usize)],
    ) -> Result<Self> {
        let mut net = Self::new(agent_labels.len(), group_labels.len());
        net.agent_labels = agent_labels;
        net.group_labels = group_labels;
        net.insert_all(memberships)?;
        Ok(net)
    }

    fn insert_all(&mut self, memberships: &[(usize, usize)]) -> Result<()> {
        let mut pairs = BTreeSet::new();
        for &(a, g) in memberships {
            if a >= self.agent_count {
                return Err(Error::NodeOutOfRange {
                    id: a,
                    node_count: self.agent_count,
                });
            }
            if g >= self.group_count {
                return Err(Error::NodeOutOfRange {
                    id: g,
                    node_count: self.group_count,
                });
            }
            pairs.insert((a, g));
        }
        for (a, g) in pairs {
            self.agent_groups[a].push(g);
        }
        Ok(())
    }

    /// Replace agent `a`'s memberships with a sorted, deduplicated group list.
    pub(crate) fn set_agent_groups(&mut self, a: usize, mut groups: Vec<usize>) {
        groups.sort_unstable();
        groups.dedup();
        debug_assert!(groups.iter().all(|&g| g < self.group_count));
        self.agent_groups[a] = groups;
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    pub fn group_count(&self) -> usize {
        self.group_count
    }

    /// Sorted group ids agent `a` belongs to.
    pub fn agent_groups(&self, a: usize) -> &[usize] {
        &self.agent_groups[a]
    }

    pub fn contains(&self, agent: usize, group: usize) -> bool {
        self.agent_groups[agent].binary_search(&group).is_ok()
    }

    pub fn membership_count(&self) -> usize {
        self.agent_groups.iter().map(Vec::len).sum()
    }

    /// All memberships as `(agent, group)`, ascending.
    pub fn memberships(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.agent_groups
            .iter()
            .enumerate()
            .flat_map(|(a, gs)| gs.iter().map(move |&g| (a, g)))
    }

    /// Member lists per group (inverted index), each sorted.
    pub fn group_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.group_count];
        for (a, g) in self.memberships() {
            members[g].push(a);
        }
        members
    }

    pub fn agent_labels(&self) -> &[String] {
        &self.agent_labels
    }

    pub fn group_labels(&self) -> &[String] {
        &self.group_labels
    }

    /// Agents that belong to no group at all.
    pub fn isolate_count(&self) -> usize {
        self.agent_groups.iter().filter(|g| g.is_empty()).count()
    }
}

/// Agent and group degree sequences; the sums of both equal the membership count.
pub fn degrees(bip: &TwoModeNetwork) -> (Vec<usize>, Vec<usize>) {
    let agent: Vec<usize> = (0..bip.agent_count())
        .map(|a| bip.agent_groups(a).len())
        .collect();
    let mut group = vec![0usize; bip.group_count()];
    for (_, g) in bip.memberships() {
        group[g] += 1;
    }
    (agent, group)
}

/// Weighted one-mode projection: co-membership counts per agent pair.
#[derive(Debug, Clone)]
pub struct ProjectionMatrix {
    size: usize,
    weights: Vec<u32>,
    diagonal: Vec<u32>,
}

impl ProjectionMatrix {
    #[inline]
    fn tri_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        i * self.size - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of groups agents `i` and `j` share (`i != j`).
    pub fn weight(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return self.diagonal[i];
        }
        self.weights[self.tri_index(i.min(j), i.max(j))]
    }

    /// Group degree of agent `i`.
    pub fn diagonal(&self, i: usize) -> u32 {
        self.diagonal[i]
    }

    pub(crate) fn upper_triangle(&self) -> &[u32] {
        &self.weights
    }
}

/// Shared-group counts for every agent pair, accumulated group by group.
fn pairwise_overlap(bip: &TwoModeNetwork) -> Vec<u32> {
    let n = bip.agent_count();
    let mut weights = vec![0u32; n * (n - 1) / 2];
    for members in bip.group_members() {
        for (idx, &i) in members.iter().enumerate() {
            let row = i * n - i * (i + 1) / 2;
            for &j in &members[idx + 1..] {
                weights[row + (j - i - 1)] += 1;
            }
        }
    }
    weights
}

/// Project the two-mode network onto agents: weight = shared-group count,
/// diagonal = each agent's group degree.
pub fn project(bip: &TwoModeNetwork) -> ProjectionMatrix {
    let n = bip.agent_count();
    let weights = if n >= 2 {
        pairwise_overlap(bip)
    } else {
        Vec::new()
    };
    let diagonal = (0..n).map(|a| bip.agent_groups(a).len() as u32).collect();
    ProjectionMatrix {
        size: n,
        weights,
        diagonal,
    }
}

/// Number of complete 2x2 sub-bicliques: agent pairs sharing at least two
/// groups, counted as C(shared, 2) over all pairs.
pub fn count_four_cycles(bip: &TwoModeNetwork) -> u64 {
    if bip.agent_count() < 2 {
        return 0;
    }
    pairwise_overlap(bip)
        .into_iter()
        .map(|w| {
            let w = w as u64;
            w * (w.saturating_sub(1)) / 2
        })
        .sum()
}

fn check_label(label: &str, allow_spaces: bool) -> Result<()> {
    let bad = label.is_empty()
        || label.contains(',')
        || label.contains('"')
        || label.contains('\n')
        || label.contains('\r')
        || (!allow_spaces && label.chars().any(char::is_whitespace))
        || (allow_spaces && (label.starts_with(char::is_whitespace) || label.ends_with(char::is_whitespace)))
        || label.starts_with('#');
    if bad {
        return Err(Error::InvalidLabel {
            label: label.to_string(),
        });
    }
    Ok(())
}

/// Render as incidence CSV: header `agent,<group labels>`, one 0/1 row per
/// agent. The output of `write_incidence` re-reads to an identical network and
/// re-writes to identical bytes.
pub fn write_incidence(bip: &TwoModeNetwork) -> Result<String> {
    for label in bip.agent_labels().iter().chain(bip.group_labels()) {
        check_label(label, true)?;
    }
    let mut out = String::new();
    out.push_str("agent");
    for g in bip.group_labels() {
        out.push(',');
        out.push_str(g);
    }
    out.push('\n');
    for a in 0..bip.agent_count() {
        out.push_str(&bip.agent_labels()[a]);
        let mut next = bip.agent_groups(a).iter().peekable();
        for g in 0..bip.group_count() {
            let cell = if next.peek() == Some(&&g) {
                next.next();
                '1'
            } else {
                '0'
            };
            out.push(',');
            out.push(cell);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Parse incidence CSV. Cells must be exactly `0` or `1`; row and column in
/// errors are 1-based file positions.
pub fn read_incidence(text: &str) -> Result<TwoModeNetwork> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().ok_or(Error::EmptyIncidence)?;
    let mut header_cells = header.split(',');
    let _agent_column = header_cells.next();
    let group_labels: Vec<String> = header_cells.map(str::to_string).collect();
    let group_count = group_labels.len();

    let mut seen_groups = BTreeSet::new();
    for label in &group_labels {
        if !seen_groups.insert(label.as_str()) {
            return Err(Error::DuplicateLabel {
                label: label.clone(),
            });
        }
    }

    let mut agent_labels: Vec<String> = Vec::new();
    let mut seen_agents = BTreeSet::new();
    let mut memberships: Vec<(usize, usize)> = Vec::new();
    for (row_idx, row) in lines.enumerate() {
        let row_no = row_idx + 2; // 1-based, after the header
        if row.is_empty() {
            continue;
        }
        let mut cells = row.split(',');
        let agent_label = cells.next().unwrap_or_default().to_string();
        let agent = agent_labels.len();
        if !seen_agents.insert(agent_label.clone()) {
            return Err(Error::DuplicateLabel { label: agent_label });
        }
        agent_labels.push(agent_label);
        let mut got = 1;
        for (g, cell) in cells.enumerate() {
            got += 1;
            if g >= group_count {
                continue; // counted; reported as ragged below
            }
            match cell {
                "0" => {}
                "1" => memberships.push((agent, g)),
                other => {
                    return Err(Error::NonBinaryCell {
                        row: row_no,
                        col: g + 2,
                        value: other.to_string(),
                    });
                }
            }
        }
        if got != group_count + 1 {
            return Err(Error::RaggedRow {
                row: row_no,
                expected: group_count + 1,
                got,
            });
        }
    }
    TwoModeNetwork::with_labels(agent_labels, group_labels, &memberships)
}

/// Render as sparse `agent group` lines, ordered by (agent id, group id).
///
/// Agents and groups without any membership are not representable here; use
/// the incidence CSV when isolates must survive a round trip.
pub fn write_coordinate_list(bip: &TwoModeNetwork) -> Result<String> {
    for label in bip.agent_labels().iter().chain(bip.group_labels()) {
        check_label(label, false)?;
    }
    let mut out = String::new();
    for (a, g) in bip.memberships() {
        let _ = writeln!(out, "{} {}", bip.agent_labels()[a], bip.group_labels()[g]);
    }
    Ok(out)
}

/// Parse `agent group` lines (whitespace- or comma-separated); `#` lines are
/// ignored and ids follow order of first appearance, as in the edge list.
pub fn read_coordinate_list(text: &str) -> Result<TwoModeNetwork> {
    let mut agent_labels: Vec<String> = Vec::new();
    let mut group_labels: Vec<String> = Vec::new();
    let mut agent_index = std::collections::HashMap::new();
    let mut group_index = std::collections::HashMap::new();
    let mut memberships = BTreeSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = raw
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let [a, g] = tokens.as_slice() else {
            return Err(Error::MalformedLine {
                line: lineno + 1,
                content: raw.trim().to_string(),
            });
        };
        let a_id = *agent_index.entry(a.to_string()).or_insert_with(|| {
            agent_labels.push(a.to_string());
            agent_labels.len() - 1
        });
        let g_id = *group_index.entry(g.to_string()).or_insert_with(|| {
            group_labels.push(g.to_string());
            group_labels.len() - 1
        });
        memberships.insert((a_id, g_id));
    }

    let pairs: Vec<(usize, usize)> = memberships.into_iter().collect();
    TwoModeNetwork::with_labels(agent_labels, group_labels, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_bip(agents: usize, groups: usize, fill: f64, seed: u64) -> TwoModeNetwork {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = Vec::new();
        for a in 0..agents {
            for g in 0..groups {
                if rng.random::<f64>() < fill {
                    m.push((a, g));
                }
            }
        }
        TwoModeNetwork::from_memberships(agents, groups, &m).unwrap()
    }

    #[test]
    fn degrees_of_empty_network_are_zero() {
        let bip = TwoModeNetwork::new(4, 3);
        let (a, g) = degrees(&bip);
        assert_eq!(a, vec![0, 0, 0, 0]);
        assert_eq!(g, vec![0, 0, 0]);
    }

    #[test]
    fn degrees_single_full_group() {
        let m: Vec<(usize, usize)> = (0..5).map(|a| (a, 0)).collect();
        let bip = TwoModeNetwork::from_memberships(5, 1, &m).unwrap();
        let (a, g) = degrees(&bip);
        assert_eq!(a, vec![1; 5]);
        assert_eq!(g, vec![5]);
    }

    #[test]
    fn degree_sums_match_membership_count() {
        let bip = random_bip(9, 7, 0.4, 3);
        let (a, g) = degrees(&bip);
        let total: usize = a.iter().sum();
        assert_eq!(total, g.iter().sum::<usize>());
        assert_eq!(total, bip.membership_count());
    }

    #[test]
    fn biclique_two_by_two_has_one_four_cycle() {
        let bip =
            TwoModeNetwork::from_memberships(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(count_four_cycles(&bip), 1);
    }

    #[test]
    fn single_group_has_no_four_cycles() {
        let bip = TwoModeNetwork::from_memberships(3, 1, &[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(count_four_cycles(&bip), 0);
    }

    /// Quadruple-loop oracle: check all agent pairs x group pairs directly.
    fn brute_force_four_cycles(bip: &TwoModeNetwork) -> u64 {
        let mut count = 0;
        for i in 0..bip.agent_count() {
            for j in i + 1..bip.agent_count() {
                for g in 0..bip.group_count() {
                    for h in g + 1..bip.group_count() {
                        if bip.contains(i, g)
                            && bip.contains(i, h)
                            && bip.contains(j, g)
                            && bip.contains(j, h)
                        {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn four_cycles_match_brute_force() {
        for seed in 0..20 {
            let bip = random_bip(8, 8, 0.4, seed);
            assert_eq!(
                count_four_cycles(&bip),
                brute_force_four_cycles(&bip),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn four_cycles_invariant_under_relabeling() {
        let bip = random_bip(7, 6, 0.35, 11);
        // permute agents by reversal and groups by rotation
        let n = bip.agent_count();
        let k = bip.group_count();
        let remapped: Vec<(usize, usize)> = bip
            .memberships()
            .map(|(a, g)| (n - 1 - a, (g + 2) % k))
            .collect();
        let relabeled = TwoModeNetwork::from_memberships(n, k, &remapped).unwrap();
        assert_eq!(count_four_cycles(&bip), count_four_cycles(&relabeled));
    }

    #[test]
    fn projection_counts_shared_groups() {
        let bip =
            TwoModeNetwork::from_memberships(3, 4, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])
                .unwrap();
        let proj = project(&bip);
        assert_eq!(proj.weight(0, 1), 3);
        assert_eq!(proj.weight(1, 0), 3);
        assert_eq!(proj.weight(0, 2), 0);
        assert_eq!(proj.diagonal(0), 3);
        assert_eq!(proj.diagonal(2), 0);
    }

    #[test]
    fn projection_matches_matrix_product_oracle() {
        for seed in 0..10 {
            let bip = random_bip(10, 10, 0.4, 100 + seed);
            let proj = project(&bip);
            for i in 0..10 {
                for j in 0..10 {
                    // independent route: explicit inner product over groups
                    let mut dot = 0u32;
                    for g in 0..10 {
                        if bip.contains(i, g) && bip.contains(j, g) {
                            dot += 1;
                        }
                    }
                    assert_eq!(proj.weight(i, j), dot, "seed {seed} pair ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn projection_weights_bounded_by_degrees() {
        let bip = random_bip(12, 9, 0.5, 21);
        let proj = project(&bip);
        let (deg, _) = degrees(&bip);
        for i in 0..12 {
            for j in i + 1..12 {
                assert!(proj.weight(i, j) as usize <= deg[i].min(deg[j]));
            }
        }
    }

    #[test]
    fn incidence_round_trip() {
        let bip = random_bip(6, 5, 0.4, 9);
        let text = write_incidence(&bip).unwrap();
        let back = read_incidence(&text).unwrap();
        assert_eq!(back, bip);
        assert_eq!(write_incidence(&back).unwrap(), text);
    }

    #[test]
    fn incidence_preserves_isolates() {
        let bip = TwoModeNetwork::from_memberships(3, 2, &[(0, 0)]).unwrap();
        let back = read_incidence(&write_incidence(&bip).unwrap()).unwrap();
        assert_eq!(back.agent_count(), 3);
        assert_eq!(back.group_count(), 2);
        assert_eq!(back.isolate_count(), 2);
    }

    #[test]
    fn incidence_rejects_non_binary_cell() {
        let text = "agent,g0,g1\na,1,2\n";
        match read_incidence(text) {
            Err(Error::NonBinaryCell { row, col, value }) => {
                assert_eq!((row, col), (2, 3));
                assert_eq!(value, "2");
            }
            other => panic!("expected non-binary cell error, got {other:?}"),
        }
    }

    #[test]
    fn incidence_rejects_ragged_row() {
        let text = "agent,g0,g1\na,1\n";
        assert!(matches!(
            read_incidence(text),
            Err(Error::RaggedRow { row: 2, expected: 3, got: 2 })
        ));
        let long = "agent,g0\na,1,0\n";
        assert!(matches!(read_incidence(long), Err(Error::RaggedRow { .. })));
    }

    #[test]
    fn incidence_rejects_empty_input() {
        assert!(matches!(read_incidence(""), Err(Error::EmptyIncidence)));
    }

    #[test]
    fn incidence_rejects_unwritable_labels() {
        let bip = TwoModeNetwork::with_labels(
            vec!["a,b".into()],
            vec!["g".into()],
            &[(0, 0)],
        )
        .unwrap();
        assert!(matches!(
            write_incidence(&bip),
            Err(Error::InvalidLabel { .. })
        ));
    }

    #[test]
    fn coordinate_list_round_trip() {
        let bip = TwoModeNetwork::from_memberships(4, 3, &[(0, 0), (1, 0), (1, 2), (3, 1)]).unwrap();
        let text = write_coordinate_list(&bip).unwrap();
        let back = read_coordinate_list(&text).unwrap();
        let orig: Vec<_> = bip
            .memberships()
            .map(|(a, g)| {
                (
                    bip.agent_labels()[a].clone(),
                    bip.group_labels()[g].clone(),
                )
            })
            .collect();
        let mut round: Vec<_> = back
            .memberships()
            .map(|(a, g)| {
                (
                    back.agent_labels()[a].clone(),
                    back.group_labels()[g].clone(),
                )
            })
            .collect();
        round.sort();
        let mut orig_sorted = orig;
        orig_sorted.sort();
        assert_eq!(round, orig_sorted);
    }

    #[test]
    fn coordinate_list_rejects_malformed() {
        assert!(matches!(
            read_coordinate_list("a b c"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
    }

    #[test]
    fn membership_out_of_range_rejected() {
        assert!(TwoModeNetwork::from_memberships(2, 2, &[(2, 0)]).is_err());
        assert!(TwoModeNetwork::from_memberships(2, 2, &[(0, 5)]).is_err());
    }
}

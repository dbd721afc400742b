//! Undirected simple graphs of agents, plus the primitives the group models
//! consume: edge-list I/O, induced density, geodesic distances, maximal-clique
//! sampling, small-world generation and the embedded karate club dataset.

use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;

use crate::error::{Error, Result};

/// Above this size adjacency is kept as sorted neighbor lists only; below it a
/// packed bit matrix backs O(1) edge tests. Behavior is identical either way.
const DENSE_NODE_LIMIT: usize = 4096;

/// Undirected, unweighted simple graph with dense node ids `0..node_count`.
///
/// Immutable after construction, so it can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct OneModeNetwork {
    node_count: usize,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
    dense: Option<DenseAdjacency>,
}

#[derive(Debug, Clone)]
struct DenseAdjacency {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl DenseAdjacency {
    fn build(node_count: usize, neighbors: &[Vec<usize>]) -> Self {
        let words_per_row = node_count.div_ceil(64);
        let mut bits = vec![0u64; words_per_row * node_count];
        for (i, nbrs) in neighbors.iter().enumerate() {
            for &j in nbrs {
                bits[i * words_per_row + j / 64] |= 1 << (j % 64);
            }
        }
        Self {
            words_per_row,
            bits,
        }
    }

    #[inline]
    fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words_per_row + j / 64] & (1 << (j % 64)) != 0
    }
}

impl OneModeNetwork {
    /// Build a network from `node_count` nodes and an edge list.
    ///
    /// Duplicate edges collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(node_count, edges, None)
    }

    /// Same as [`from_edges`](Self::from_edges) with one label per node.
    pub fn from_edges_with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Self::build(labels.len(), edges, Some(labels))
    }

    fn build(
        node_count: usize,
        edges: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut pairs = BTreeSet::new();
        for &(a, b) in edges {
            if a >= node_count || b >= node_count {
                return Err(Error::NodeOutOfRange {
                    id: a.max(b),
                    node_count,
                });
            }
            if a == b {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: a.to_string(),
                });
            }
            pairs.insert((a.min(b), a.max(b)));
        }
        let mut neighbors = vec![Vec::new(); node_count];
        for &(a, b) in &pairs {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let dense = (node_count <= DENSE_NODE_LIMIT)
            .then(|| DenseAdjacency::build(node_count, &neighbors));
        Ok(Self {
            node_count,
            neighbors,
            edge_count: pairs.len(),
            labels,
            dense,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor ids of `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        match &self.dense {
            Some(dense) => dense.contains(i, j),
            None => self.neighbors[i].binary_search(&j).is_ok(),
        }
    }

    /// All edges as `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of node `i`, falling back to the id itself.
    pub fn label(&self, i: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[i].as_str()),
            None => Cow::Owned(i.to_string()),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&i| i < self.node_count),
        }
    }

    /// True when every node is reachable from every other (vacuously for n <= 1).
    pub fn is_connected(&self) -> bool {
        if self.node_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.node_count
    }
}

/// Parse a whitespace- or comma-separated edge list, one edge per line.
///
/// Lines beginning with `#` are ignored, duplicate edges collapse, and labels
/// keep their order of first appearance as node ids.
pub fn load_edge_list(text: &str) -> Result<OneModeNetwork> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&id) = index.get(label) {
            return id;
        }
        let id = labels.len();
        labels.push(label.to_string());
        index.insert(label.to_string(), id);
        id
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = raw
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        match tokens.as_slice() {
            [a, b] => {
                if a == b {
                    return Err(Error::SelfLoop {
                        line,
                        label: a.to_string(),
                    });
                }
                let ia = intern(a, &mut labels);
                let ib = intern(b, &mut labels);
                edges.insert((ia.min(ib), ia.max(ib)));
            }
            _ => {
                return Err(Error::MalformedLine {
                    line,
                    content: raw.trim().to_string(),
                });
            }
        }
    }

    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
    OneModeNetwork::from_edges_with_labels(labels, &edge_vec)
}

/// Render the network as `label1 label2` lines, lexicographically sorted.
pub fn write_edge_list(net: &OneModeNetwork) -> String {
    let mut lines: Vec<String> = net
        .edges()
        .map(|(i, j)| format!("{} {}", net.label(i), net.label(j)))
        .collect();
    lines.sort_unstable();
    let mut out = String::new();
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Fraction of present edges among all pairs of `subset`.
pub fn induced_density(net: &OneModeNetwork, subset: &[usize]) -> Result<f64> {
    let mut ids: Vec<usize> = subset.to_vec();
    ids.sort_unstable();
    ids.dedup();
    for &i in &ids {
        if i >= net.node_count() {
            return Err(Error::NodeOutOfRange {
                id: i,
                node_count: net.node_count(),
            });
        }
    }
    let s = ids.len();
    if s < 2 {
        return Err(Error::DensityUndefined { size: s });
    }
    let mut present = 0usize;
    for (a, &i) in ids.iter().enumerate() {
        for &j in &ids[a + 1..] {
            if net.has_edge(i, j) {
                present += 1;
            }
        }
    }
    Ok(present as f64 / (s * (s - 1) / 2) as f64)
}

/// Symmetric matrix of pairwise distances (graph hops or Euclidean lengths).
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    size: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn zeroed(size: usize) -> Self {
        Self {
            size,
            data: vec![0.0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.size + j]
    }

    pub fn set_symmetric(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.size + j] = value;
        self.data[j * self.size + i] = value;
    }

    /// Smallest off-diagonal entry; 0 when there are no off-diagonal entries.
    pub fn min_off_diagonal(&self) -> f64 {
        let m = self.off_diagonal().fold(f64::INFINITY, f64::min);
        if m.is_finite() {
            m
        } else {
            0.0
        }
    }

    /// Largest off-diagonal entry; 0 when there are no off-diagonal entries.
    pub fn max_off_diagonal(&self) -> f64 {
        self.off_diagonal().fold(0.0, f64::max)
    }

    fn off_diagonal(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.size).flat_map(move |i| {
            (0..self.size)
                .filter(move |&j| j != i)
                .map(move |j| self.get(i, j))
        })
    }
}

/// How to report node pairs with no connecting path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DisconnectedPolicy {
    /// Replace unreachable-pair distances with (max finite distance + 1),
    /// keeping downstream embeddings well-defined.
    #[default]
    Bridge,
    /// Fail on the first unreachable pair.
    Strict,
}

/// All-pairs shortest hop counts by breadth-first traversal from every node.
pub fn geodesic_distances(net: &OneModeNetwork) -> DistanceMatrix {
    geodesic_distances_with(net, DisconnectedPolicy::Bridge)
        .expect("bridge policy cannot fail")
}

pub fn geodesic_distances_with(
    net: &OneModeNetwork,
    policy: DisconnectedPolicy,
) -> Result<DistanceMatrix> {
    let n = net.node_count();
    let mut dist = DistanceMatrix::zeroed(n);
    let mut max_finite = 0.0f64;
    let mut unreachable: Vec<(usize, usize)> = Vec::new();

    let mut hops = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for source in 0..n {
        hops.fill(usize::MAX);
        hops[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in net.neighbors(u) {
                if hops[v] == usize::MAX {
                    hops[v] = hops[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (target, &h) in hops.iter().enumerate().skip(source + 1) {
            if h == usize::MAX {
                if policy == DisconnectedPolicy::Strict {
                    return Err(Error::Disconnected {
                        i: source,
                        j: target,
                    });
                }
                unreachable.push((source, target));
            } else {
                let d = h as f64;
                max_finite = max_finite.max(d);
                dist.set_symmetric(source, target, d);
            }
        }
    }
    let bridge = max_finite + 1.0;
    for (i, j) in unreachable {
        dist.set_symmetric(i, j, bridge);
    }
    Ok(dist)
}

/// Strategy for drawing one maximal clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CliqueMethod {
    /// Random start vertex, then repeatedly add a uniformly random common
    /// neighbor until none remains. Cheap, but not uniform over maximal cliques.
    #[default]
    Greedy,
    /// Enumerate every maximal clique and pick one uniformly. Exponential in
    /// the worst case; meant for graphs where enumeration is feasible.
    Uniform,
}

/// Draw one maximal clique, returned as sorted agent ids.
pub fn sample_maximal_clique(
    net: &OneModeNetwork,
    rng: &mut impl Rng,
    method: CliqueMethod,
) -> Result<Vec<usize>> {
    if net.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    match method {
        CliqueMethod::Greedy => {
            let start = rng.random_range(0..net.node_count());
            let mut clique = vec![start];
            let mut common: Vec<usize> = net.neighbors(start).to_vec();
            while !common.is_empty() {
                let pick = common[rng.random_range(0..common.len())];
                clique.push(pick);
                let nbrs = net.neighbors(pick);
                common.retain(|&v| v != pick && nbrs.binary_search(&v).is_ok());
            }
            clique.sort_unstable();
            Ok(clique)
        }
        CliqueMethod::Uniform => {
            let cliques = enumerate_maximal_cliques(net);
            debug_assert!(!cliques.is_empty());
            Ok(cliques[rng.random_range(0..cliques.len())].clone())
        }
    }
}

/// Bron-Kerbosch with pivoting. Returns each clique sorted, list sorted.
pub(crate) fn enumerate_maximal_cliques(net: &OneModeNetwork) -> Vec<Vec<usize>> {
    fn intersect_neighbors(net: &OneModeNetwork, set: &[usize], v: usize) -> Vec<usize> {
        let nbrs = net.neighbors(v);
        set.iter()
            .copied()
            .filter(|&u| nbrs.binary_search(&u).is_ok())
            .collect()
    }

    fn expand(
        net: &OneModeNetwork,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                let nbrs = net.neighbors(u);
                p.iter().filter(|&&v| nbrs.binary_search(&v).is_ok()).count()
            })
            .expect("P or X nonempty");
        let pivot_nbrs = net.neighbors(pivot);
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| pivot_nbrs.binary_search(&v).is_err())
            .collect();
        for v in candidates {
            r.push(v);
            expand(
                net,
                r,
                intersect_neighbors(net, &p, v),
                intersect_neighbors(net, &x, v),
                out,
            );
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    let mut out = Vec::new();
    let p: Vec<usize> = (0..net.node_count()).collect();
    expand(net, &mut Vec::new(), p, Vec::new(), &mut out);
    out.sort();
    out
}

/// Watts-Strogatz small-world graph: ring lattice of even degree `k`, each
/// lattice edge rewired with probability `beta` while keeping the graph simple.
///
/// The result always has exactly `n * k / 2` edges.
pub fn watts_strogatz(
    n: usize,
    k: usize,
    beta: f64,
    rng: &mut impl Rng,
) -> Result<OneModeNetwork> {
    let invalid = |reason: &'static str| Error::InvalidWattsStrogatz { n, k, beta, reason };
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if k % 2 != 0 {
        return Err(invalid("k must be even"));
    }
    if n <= k {
        return Err(invalid("n must exceed k"));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(invalid("beta must lie in [0, 1]"));
    }

    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        for j in 1..=k / 2 {
            let t = (i + j) % n;
            adj[i].insert(t);
            adj[t].insert(i);
        }
    }
    for j in 1..=k / 2 {
        for i in 0..n {
            let target = (i + j) % n;
            if rng.random::<f64>() >= beta {
                continue;
            }
            if adj[i].len() >= n - 1 {
                continue; // saturated, nothing to rewire to
            }
            debug_assert!(adj[i].contains(&target));
            let new_target = loop {
                let w = rng.random_range(0..n);
                if w != i && !adj[i].contains(&w) {
                    break w;
                }
            };
            adj[i].remove(&target);
            adj[target].remove(&i);
            adj[i].insert(new_target);
            adj[new_target].insert(i);
        }
    }

    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(i, set)| set.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    debug_assert_eq!(edges.len(), n * k / 2);
    OneModeNetwork::from_edges(n, &edges)
}

/// Zachary's karate club network: 34 nodes, 78 edges, labels "1".."34".
pub fn karate_club() -> OneModeNetwork {
    load_edge_list(include_str!("data/karate.txt")).expect("embedded karate dataset is valid")
}

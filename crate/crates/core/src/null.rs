//! Degree-preserving randomization of two-mode networks (curveball trades)
//! and statistics normalized against the resulting null ensembles.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bipartite::{count_four_cycles, TwoModeNetwork};
use crate::error::{Error, Result};
use crate::seed::{rng_for, stream};

/// An observed statistic next to its null-ensemble draws.
#[derive(Debug, Clone)]
pub struct NullEnsembleStats {
    pub observed: f64,
    pub null_values: Vec<f64>,
    /// observed / mean(null); `+inf` with `degenerate_null` set when the null
    /// mean is zero.
    pub ratio: f64,
    pub degenerate_null: bool,
    /// Requested quantile levels of the null draws, as (level, value).
    pub quantiles: Vec<(f64, f64)>,
}

impl NullEnsembleStats {
    fn build(observed: f64, null_values: Vec<f64>, levels: &[f64]) -> Self {
        let mean = null_values.iter().sum::<f64>() / null_values.len() as f64;
        let (ratio, degenerate_null) = if mean > 0.0 {
            (observed / mean, false)
        } else {
            (f64::INFINITY, true)
        };
        let mut sorted = null_values.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let quantiles = levels
            .iter()
            .map(|&q| (q, sorted[empirical_quantile_index(sorted.len(), q)]))
            .collect();
        Self {
            observed,
            null_values,
            ratio,
            degenerate_null,
            quantiles,
        }
    }

    pub fn null_mean(&self) -> f64 {
        self.null_values.iter().sum::<f64>() / self.null_values.len() as f64
    }
}

/// Index of the smallest sorted value with at least `level` of the sample at
/// or below it. The epsilon guards the integer boundary against float error.
pub(crate) fn empirical_quantile_index(len: usize, level: f64) -> usize {
    let k = (level * len as f64 - 1e-9).ceil() as usize;
    k.clamp(1, len) - 1
}

/// Default trade count: five trades per agent.
pub fn default_curveball_iterations(bip: &TwoModeNetwork) -> usize {
    5 * bip.agent_count()
}

/// Curveball randomization: repeatedly pick two distinct agents and re-deal
/// the groups they do not share, preserving both degree sequences exactly.
///
/// Networks with fewer than two agents come back unchanged.
pub fn curveball(bip: &TwoModeNetwork, iterations: usize, rng: &mut impl Rng) -> TwoModeNetwork {
    let n = bip.agent_count();
    let mut shuffled = bip.clone();
    if n < 2 {
        return shuffled;
    }
    let mut pool: Vec<usize> = Vec::new();
    for _ in 0..iterations {
        let i = rng.random_range(0..n);
        let j = loop {
            let j = rng.random_range(0..n);
            if j != i {
                break j;
            }
        };
        let gi = shuffled.agent_groups(i);
        let gj = shuffled.agent_groups(j);

        let mut shared: Vec<usize> = Vec::with_capacity(gi.len().min(gj.len()));
        pool.clear();
        let (mut a, mut b) = (0, 0);
        while a < gi.len() && b < gj.len() {
            match gi[a].cmp(&gj[b]) {
                std::cmp::Ordering::Equal => {
                    shared.push(gi[a]);
                    a += 1;
                    b += 1;
                }
                std::cmp::Ordering::Less => {
                    pool.push(gi[a]);
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    pool.push(gj[b]);
                    b += 1;
                }
            }
        }
        let exclusive_i = gi.len() - shared.len();
        pool.extend_from_slice(&gi[a..]);
        pool.extend_from_slice(&gj[b..]);
        if pool.is_empty() {
            continue; // identical membership sets, nothing to trade
        }

        pool.shuffle(rng);
        let mut new_i = shared.clone();
        new_i.extend_from_slice(&pool[..exclusive_i]);
        let mut new_j = shared;
        new_j.extend_from_slice(&pool[exclusive_i..]);
        shuffled.set_agent_groups(i, new_i);
        shuffled.set_agent_groups(j, new_j);
    }
    shuffled
}

/// Observed four-cycle count over the mean count across `replicates`
/// curveball randomizations, each run on its own derived RNG stream.
pub fn four_cycle_ratio(
    bip: &TwoModeNetwork,
    replicates: usize,
    iterations: usize,
    rng: &mut impl Rng,
) -> Result<NullEnsembleStats> {
    four_cycle_ratio_with_quantiles(bip, replicates, iterations, rng, &[])
}

pub fn four_cycle_ratio_with_quantiles(
    bip: &TwoModeNetwork,
    replicates: usize,
    iterations: usize,
    rng: &mut impl Rng,
    quantile_levels: &[f64],
) -> Result<NullEnsembleStats> {
    if replicates < 1 {
        return Err(Error::TooFewReplicates {
            got: replicates,
            min: 1,
        });
    }
    let observed = count_four_cycles(bip) as f64;
    let master = rng.next_u64();
    let null_values: Vec<f64> = (0..replicates)
        .map(|r| {
            let mut child = rng_for(master, &[stream::NULL_REPLICATE, r as u64]);
            count_four_cycles(&curveball(bip, iterations, &mut child)) as f64
        })
        .collect();
    Ok(NullEnsembleStats::build(
        observed,
        null_values,
        quantile_levels,
    ))
}

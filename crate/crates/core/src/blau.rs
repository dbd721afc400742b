//! Euclidean embedding of geodesic distances (classical Torgerson scaling)
//! and sampling of recruitment niches inside that space.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Beta, Distribution};

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Relative cutoff below which eigenvalues count as zero.
const EIGENVALUE_TOLERANCE: f64 = 1e-10;

/// A d-dimensional Euclidean position per agent plus the pairwise distances
/// those positions induce.
#[derive(Debug, Clone)]
pub struct BlauSpace {
    dimension: usize,
    coordinates: Vec<f64>, // row-major, agent-major
    distances: DistanceMatrix,
}

impl BlauSpace {
    /// Build directly from coordinates (`data` is agent-major, `n * d` long).
    pub fn from_coordinates(agent_count: usize, dimension: usize, data: Vec<f64>) -> Result<Self> {
        if dimension == 0 || data.len() != agent_count * dimension {
            return Err(Error::InvalidConfig(format!(
                "coordinate block of {} values does not match {} agents x {} dimensions",
                data.len(),
                agent_count,
                dimension
            )));
        }
        let distances = distances_from_coordinates(agent_count, dimension, &data);
        Ok(Self {
            dimension,
            coordinates: data,
            distances,
        })
    }

    pub fn agent_count(&self) -> usize {
        self.distances.size()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Coordinates of agent `i` (length `dimension`).
    pub fn coordinates(&self, i: usize) -> &[f64] {
        &self.coordinates[i * self.dimension..(i + 1) * self.dimension]
    }

    /// Pairwise Euclidean distances between embedded agents.
    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    /// CSV dump of coordinates: header `agent,x1..xd`, one row per agent.
    pub fn coordinates_csv(&self, labels: &[String]) -> String {
        let mut out = String::from("agent");
        for axis in 1..=self.dimension {
            out.push_str(&format!(",x{axis}"));
        }
        out.push('\n');
        for i in 0..self.agent_count() {
            out.push_str(&labels[i]);
            for c in self.coordinates(i) {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

fn distances_from_coordinates(n: usize, d: usize, data: &[f64]) -> DistanceMatrix {
    let mut dist = DistanceMatrix::zeroed(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut sq = 0.0;
            for axis in 0..d {
                let delta = data[i * d + axis] - data[j * d + axis];
                sq += delta * delta;
            }
            dist.set_symmetric(i, j, sq.sqrt());
        }
    }
    dist
}

/// Classical (Torgerson) multidimensional scaling.
///
/// Double-centers the squared-distance matrix, takes the top-`d` spectral
/// pairs, clamps negative eigenvalues to zero, and canonicalizes each axis so
/// its first nonzero loading is positive. Deterministic for a given input.
pub fn embed_classical_mds(dist: &DistanceMatrix, d: usize) -> Result<BlauSpace> {
    let n = dist.size();
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "embedding requires at least 2 nodes, got {n}"
        )));
    }
    if d < 1 || d > n - 1 {
        return Err(Error::InvalidDimension { d, size: n });
    }

    // B = -1/2 * J * D^2 * J with J the centering matrix.
    let sq = |i: usize, j: usize| {
        let v = dist.get(i, j);
        v * v
    };
    let mut row_means = vec![0.0; n];
    let mut grand = 0.0;
    for i in 0..n {
        let mut sum = 0.0;
        for j in 0..n {
            sum += sq(i, j);
        }
        row_means[i] = sum / n as f64;
        grand += sum;
    }
    grand /= (n * n) as f64;
    let mut b = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = -0.5 * (sq(i, j) - row_means[i] - row_means[j] + grand);
        }
    }

    let eigen = b.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &bb| {
        eigen.eigenvalues[bb]
            .partial_cmp(&eigen.eigenvalues[a])
            .unwrap()
            .then(a.cmp(&bb))
    });

    let lambda_max = eigen.eigenvalues[order[0]].max(0.0);
    let cutoff = EIGENVALUE_TOLERANCE * lambda_max;

    let mut coordinates = vec![0.0; n * d];
    for (axis, &idx) in order.iter().take(d).enumerate() {
        let lambda = eigen.eigenvalues[idx];
        if lambda <= cutoff {
            continue; // axis stays at zero
        }
        let scale = lambda.sqrt();
        let column: DVector<f64> = eigen.eigenvectors.column(idx).into();
        let flip = column
            .iter()
            .find(|v| v.abs() > 1e-12)
            .map_or(1.0, |v| if *v < 0.0 { -1.0 } else { 1.0 });
        for i in 0..n {
            coordinates[i * d + axis] = column[i] * scale * flip;
        }
    }

    BlauSpace::from_coordinates(n, d, coordinates)
}

/// A recruitment niche: ball around `center` of radius `radius` in Blau space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NicheSpec {
    pub center: usize,
    pub radius: f64,
}

/// Shape of the positive-skew distribution feeding niche radii.
///
/// A Beta law on [0, 1]; the default (1, 10) keeps most niches narrow with a
/// long right tail of wide ones. The raw draw is then scaled affinely onto
/// [min(D), max(D)].
#[derive(Debug, Clone, Copy)]
pub struct RadiusDistribution {
    pub alpha: f64,
    pub beta: f64,
}

impl Default for RadiusDistribution {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 10.0,
        }
    }
}

/// Draw a niche: uniform center agent, radius from the positive-skew default.
pub fn sample_niche(blau: &BlauSpace, rng: &mut impl Rng) -> NicheSpec {
    sample_niche_with(blau, RadiusDistribution::default(), rng)
}

pub fn sample_niche_with(
    blau: &BlauSpace,
    radius_dist: RadiusDistribution,
    rng: &mut impl Rng,
) -> NicheSpec {
    let center = rng.random_range(0..blau.agent_count());
    let raw = Beta::new(radius_dist.alpha, radius_dist.beta)
        .expect("beta shape parameters must be positive and finite")
        .sample(rng);
    let lo = blau.distances().min_off_diagonal();
    let hi = blau.distances().max_off_diagonal();
    NicheSpec {
        center,
        radius: raw * (hi - lo) + lo,
    }
}

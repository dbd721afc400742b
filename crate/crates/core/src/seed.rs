//! Deterministic seed derivation.
//!
//! Every stochastic routine in this crate takes either an explicit RNG or a
//! 64-bit seed. Child streams (one per generated group, per experiment cell,
//! per null replicate) are derived from the master seed and the child's index
//! with a splitmix64 chain, so parallel execution cannot perturb results.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mix a master seed with a path of stream indices into a child seed.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut state = master;
    let mut out = splitmix64(&mut state);
    for &part in path {
        state ^= part.wrapping_mul(0xd6e8_feb8_6659_fd93);
        out ^= splitmix64(&mut state);
    }
    out
}

/// ChaCha stream for a child derived from `master` and `path`.
///
/// ChaCha output is identical on every platform and rand release, which is
/// what makes byte-identical experiment reruns possible.
pub fn rng_for(master: u64, path: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, path))
}

/// Stream tags keeping unrelated consumers of one master seed apart.
pub mod stream {
    pub const GROUP: u64 = 1;
    pub const NICHE: u64 = 2;
    pub const NULL_REPLICATE: u64 = 3;
    pub const EXPERIMENT_CELL: u64 = 4;
    pub const NETWORK: u64 = 5;
    pub const BACKBONE: u64 = 6;
}

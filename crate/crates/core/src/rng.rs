//! Deterministic seeding.
//!
//! Every trial derives its own seed as `splitmix64(master_seed ^ trial_id)`,
//! so records are independent of execution order. The SplitMix64 finalizer
//! is fixed and documented bit-exactly; the Gaussian sampling method behind
//! [`TrialRng`] is an implementation detail (statistical contracts only).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// RNG used for all stochastic operations.
pub type TrialRng = ChaCha8Rng;

/// SplitMix64 finalizer (Steele et al. mixing constants).
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed: mix of the master seed and the trial id.
pub fn derive_seed(master_seed: u64, trial_id: u64) -> u64 {
    splitmix64(master_seed ^ trial_id)
}

/// Seeded RNG for a derived seed.
pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// RNG for trial `trial_id` under `master_seed`.
pub fn trial_rng(master_seed: u64, trial_id: u64) -> TrialRng {
    rng_from_seed(derive_seed(master_seed, trial_id))
}

//! Seeded random streams.
//!
//! Every stream is a ChaCha8 generator seeded through
//! `SeedableRng::seed_from_u64`. Child streams get their seed from
//! [`derive_seed`], the SplitMix64 finalizer applied to the parent seed
//! offset by the stream id.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type LfcsRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> LfcsRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of child stream `stream` of `seed`.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

//! Seeded randomness. Every randomized search in the crate takes one of
//! these so that reports can record the seed and replay bit for bit.

use rand::SeedableRng;

pub type WorkRng = rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 1;

pub fn seeded(seed: u64) -> WorkRng {
    WorkRng::seed_from_u64(seed)
}

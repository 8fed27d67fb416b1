//! Deterministic random numbers derived from an explicit seed.
//!
//! Every stochastic choice in the crate (solver restarts, node jitter)
//! flows through here so that a fixed seed fixes the whole computation.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    /// RNG for a (seed, context) pair. The context word separates the
    /// streams of unrelated call sites so they stay independent.
    pub fn new(seed: u64, context: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&context.to_le_bytes());
        SeededRng(ChaCha8Rng::from_seed(key))
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1, 1).
    pub fn symmetric(&mut self) -> f64 {
        2.0 * self.unit() - 1.0
    }
}

/// Mixes a complex point into a context word, so per-point RNG streams
/// differ even within one call. SplitMix64 finalizer over the raw bits.
pub fn mix_context(base: u64, re: f64, im: f64) -> u64 {
    let mut x = base ^ re.to_bits().rotate_left(17) ^ im.to_bits().rotate_left(41);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

//! Reproducible pseudo-random numbers for the randomized suites.
//!
//! The generator is the 64-bit linear congruential generator
//! `x' = 6364136223846793005 * x + 1442695040888963407 (mod 2^64)`
//! (Knuth's MMIX constants). Outputs are taken from the high 32 bits of the
//! state, which have far better statistical quality than the low bits.
//! The state starts at the seed itself.

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    /// Advances the state and returns it.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// High 32 bits of the next state.
    pub fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    /// Uniform-ish value in `0..bound` (modulo reduction of `next_u32`).
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        (self.next_u32() as usize) % bound
    }

    /// Value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn bit(&mut self) -> bool {
        self.next_u32() >> 31 == 1
    }
}

//! Small portable pseudo-random generator.
//!
//! Simulation trajectories must reproduce bit-for-bit across platforms,
//! so the generator is pinned here rather than taken from a library.
//! This is splitmix64: the 64-bit state advances by the fixed increment
//! 0x9E3779B97F4A7C15 and each output is the finalizer
//!
//! ```text
//! z  = state
//! z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//! z ^= z >> 27;  z *= 0x94D049BB133111EB
//! z ^= z >> 31
//! ```
//!
//! Seeding rule: `SplitMix64::new(seed)` sets the state to the seed
//! verbatim. Independent streams for parallel work are derived with
//! [`SplitMix64::stream`], which offsets the seed by
//! `index * 0xA3EC647659359ACD` (an odd constant, so distinct indices
//! give distinct states).

const INCREMENT: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_A: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX_B: u64 = 0x94D0_49BB_1331_11EB;
const STREAM_STEP: u64 = 0xA3EC_6476_5935_9ACD;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Generator for the `index`-th independent substream of `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self::new(seed.wrapping_add(index.wrapping_mul(STREAM_STEP)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(INCREMENT);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(MIX_A);
        z = (z ^ (z >> 27)).wrapping_mul(MIX_B);
        z ^ (z >> 31)
    }

    /// Uniform double in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in [0, n).
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Multiply-shift rejection-free mapping is fine here: the bias
        // for n far below 2^64 is unmeasurable in these workloads.
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }
}

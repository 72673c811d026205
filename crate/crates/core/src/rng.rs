//! SplitMix64, the single PRNG behind every seeded operation in the crate.
//!
//! Random attacks, Barabási–Albert and Erdős–Rényi generation and sampled
//! path lengths all draw from this generator so a seed pins the whole run.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) from the top 53 bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `next_u64() mod bound`. The modulo bias is accepted so that other
    /// implementations can reproduce the stream exactly.
    #[inline]
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }
}

/// Partial Fisher–Yates: the first `k` entries of `pool` after `k` swap steps,
/// where step `j` swaps position `j` with `j + below(len - j)`.
pub fn partial_shuffle<T: Copy>(pool: &mut [T], k: usize, rng: &mut SplitMix64) -> Vec<T> {
    let k = k.min(pool.len());
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let i = j + rng.below(pool.len() - j);
        pool.swap(j, i);
        out.push(pool[j]);
    }
    out
}

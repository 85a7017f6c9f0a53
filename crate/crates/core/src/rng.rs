//! Deterministic random streams.
//!
//! All randomness in the crate flows from a single 64-bit seed through
//! this splitmix64 generator. Child streams are derived by name, so a
//! run is reproducible from `(inputs, seed)` alone and independent of
//! platform, thread count, or call order between streams.

/// splitmix64, the finalizer from Steele et al.'s SplittableRandom.
/// Passes through all 2^64 states, no short cycles.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Named child stream. Mixes the label bytes into the current state
    /// FNV-style; forking with distinct labels yields independent streams.
    pub fn fork(&mut self, label: &str) -> SplitMix64 {
        let mut h = self.next_u64() ^ 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        SplitMix64::new(h)
    }

    /// Uniform draw from `0..bound` by rejection (no modulo bias).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below(0)");
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Chance `num` in `den`.
    pub fn hit(&mut self, num: u64, den: u64) -> bool {
        self.next_below(den) < num
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }

    /// `m` distinct indices sampled uniformly from `0..n`, ascending.
    pub fn sample_indices(&mut self, n: usize, m: usize) -> Vec<usize> {
        assert!(m <= n);
        // Floyd's algorithm: m iterations, no O(n) scratch.
        let mut chosen = std::collections::BTreeSet::new();
        for j in n - m..n {
            let t = self.next_below(j as u64 + 1) as usize;
            if !chosen.insert(t) {
                chosen.insert(j);
            }
        }
        chosen.into_iter().collect()
    }
}

//! A splittable counter-based generator.
//!
//! The `n`-th output of a stream with key `k` is `mix(k + n·γ)` (wrapping),
//! where `mix` is the SplitMix64 finalizer and `γ = 0x9e3779b97f4a7c15`.
//! Child streams are keyed by `mix(mix(k) ^ (s + 1)·γ)` for stream id `s`,
//! independently of how many values the parent has produced. Both rules are
//! plain 64-bit integer arithmetic, so any language reproduces the same
//! sequences from the same seed.

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self {
            key: seed,
            counter: 0,
        }
    }

    /// An independent child stream; does not advance `self`.
    pub fn split(&self, stream: u64) -> Self {
        Self {
            key: mix(mix(self.key) ^ stream.wrapping_add(1).wrapping_mul(GAMMA)),
            counter: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GAMMA)))
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// An integer in `[lo, hi]` by multiply-shift.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let r = ((self.next_u64() as u128 * span) >> 64) as i128;
        (lo as i128 + r) as i64
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.int_in(0, len as i64 - 1) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

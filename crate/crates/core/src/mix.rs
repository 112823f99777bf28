//! Pinned 64-bit mixing function used everywhere a reproducible
//! pseudo-random stream is needed (output sampling, fault corruption,
//! randomized restart delays, test data generation).
//!
//! The function is frozen: changing it invalidates committed test vectors
//! and recorded escape-rate expectations. It is the SplitMix64 finalizer
//! applied to `seed + (counter + 1) * GOLDEN_GAMMA`.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Mix a `(seed, counter)` pair into a uniformly distributed 64-bit value.
#[inline]
pub fn mix64(seed: u64, counter: u64) -> u64 {
    let mut z = counter
        .wrapping_add(1)
        .wrapping_mul(GOLDEN_GAMMA)
        .wrapping_add(seed);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Map a mixed value onto `[0, 1)` using the top 53 bits.
#[inline]
pub fn unit_f64(z: u64) -> f64 {
    (z >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Convenience: uniform value in `[0, 1)` for a `(seed, counter)` pair.
#[inline]
pub fn unit(seed: u64, counter: u64) -> f64 {
    unit_f64(mix64(seed, counter))
}

/// Small deterministic generator over the pinned mixer, for places that
/// need a sequence rather than an indexed lookup.
#[derive(Debug, Clone)]
pub struct MixRng {
    seed: u64,
    counter: u64,
}

impl MixRng {
    pub fn new(seed: u64) -> Self {
        MixRng { seed, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        let z = mix64(self.seed, self.counter);
        self.counter += 1;
        z
    }

    /// Uniform value in `[0, 1)`.
    pub fn next_unit(&mut self) -> f64 {
        unit_f64(self.next_u64())
    }

    /// Uniform integer in `[0, bound)`. `bound` must be nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

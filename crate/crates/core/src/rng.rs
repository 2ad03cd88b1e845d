//! Seeded pseudo-random numbers with a fixed, documented algorithm.
//!
//! Generated instances must be bit-reproducible in any language, so the
//! generator is spelled out here rather than borrowed:
//!
//! * seeding: one round of SplitMix64 on the user seed; a zero result is
//!   replaced by `0x9E37_79B9_7F4A_7C15`;
//! * step: xorshift64* with shifts (12, 25, 27) and multiplier
//!   `0x2545_F491_4F6C_DD1D`;
//! * `below(n)`: `(next_u64() as u128 * n as u128) >> 64`;
//! * `unit_f64()`: `(next_u64() >> 11) * 2^-53`;
//! * `coin(p)`: `unit_f64() < p`.

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        if z == 0 {
            z = 0x9E37_79B9_7F4A_7C15;
        }
        XorShift64Star { state: z }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish integer in `0..n` (multiply-shift, no rejection). `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn below_usize(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.unit_f64() < p
    }

    /// Fisher-Yates, walking from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below_usize(i + 1);
            items.swap(i, j);
        }
    }
}

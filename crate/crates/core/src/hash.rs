//! Keyed mixing for reproducible pseudo-random oracles.
//!
//! Every random choice in the crate flows from a single `u64` run seed.
//! Components derive independent named sub-streams (`c2`, `painter`,
//! `sampler`, ...) so changing one component never perturbs another.

#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Hash of `seed` together with a sequence of words.
#[inline]
pub fn mix(seed: u64, words: &[u64]) -> u64 {
    let mut h = splitmix64(seed);
    for &w in words {
        h = splitmix64(h ^ w);
    }
    h
}

/// Seed of the named sub-stream of `seed`.
pub fn substream(seed: u64, name: &str) -> u64 {
    let mut h = splitmix64(seed ^ 0x5EED_5EED_5EED_5EED);
    for b in name.bytes() {
        h = splitmix64(h ^ b as u64);
    }
    h
}

/// Uniform float in `[0, 1)` from a hash value.
#[inline]
pub fn unit_f64(h: u64) -> f64 {
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substreams_differ() {
        assert_ne!(substream(7, "c2"), substream(7, "painter"));
        assert_eq!(substream(7, "c2"), substream(7, "c2"));
    }

    #[test]
    fn unit_interval() {
        for i in 0..1000 {
            let u = unit_f64(mix(3, &[i]));
            assert!((0.0..1.0).contains(&u));
        }
    }
}

//! Counter-based derivation of independent RNG streams.
//!
//! Every stochastic step in a sweep draws from a stream derived from the
//! master seed plus a list of integer tags (grid coordinates, replicate
//! index, permutation cycle, ...). Because the stream depends only on the
//! tags and never on scheduling, serial and parallel runs produce identical
//! output, and permuting the grid permutes the results cell-for-cell.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One round of SplitMix64; the standard finalizer with good avalanche.
#[inline]
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Folds a list of tags into the master seed, one SplitMix64 round per tag.
pub fn derive_seed(master: u64, tags: &[u64]) -> u64 {
    let mut state = splitmix64(master);
    for &t in tags {
        state = splitmix64(state ^ t);
    }
    state
}

/// Deterministic stream for the given master seed and tag path.
pub fn derive_rng(master: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, tags))
}

/// Stable 64-bit tag for a slice of coordinates, built from the IEEE-754 bit
/// patterns so that equal values always produce equal tags.
pub fn f64_slice_tag(values: &[f64]) -> u64 {
    let mut state = splitmix64(0x5353_415f_4554_4121 ^ values.len() as u64);
    for v in values {
        state = splitmix64(state ^ v.to_bits());
    }
    state
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derive_seed_is_deterministic_and_tag_sensitive() {
        assert_eq!(derive_seed(1, &[2, 3]), derive_seed(1, &[2, 3]));
        assert_ne!(derive_seed(1, &[2, 3]), derive_seed(1, &[3, 2]));
        assert_ne!(derive_seed(1, &[2, 3]), derive_seed(2, &[2, 3]));
    }

    #[test]
    fn streams_with_different_tags_diverge() {
        let a: f64 = derive_rng(7, &[0]).random();
        let b: f64 = derive_rng(7, &[1]).random();
        assert_ne!(a, b);
    }

    #[test]
    fn f64_tag_distinguishes_values_not_representations() {
        assert_eq!(f64_slice_tag(&[1.0, 2.0]), f64_slice_tag(&[1.0, 2.0]));
        assert_ne!(f64_slice_tag(&[1.0, 2.0]), f64_slice_tag(&[2.0, 1.0]));
        assert_ne!(f64_slice_tag(&[1.0]), f64_slice_tag(&[1.0, 1.0]));
    }
}

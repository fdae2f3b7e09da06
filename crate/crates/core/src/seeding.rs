//! Counter-based seed derivation for reproducible parallel sampling.
//!
//! Every Monte Carlo sample and every campaign trial owns an independent RNG
//! seeded from `stream_seed(master, index)`, so results are bit-identical no
//! matter how work is scheduled across threads.

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the seed of stream `index` from a master seed.
pub fn stream_seed(master: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master) ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

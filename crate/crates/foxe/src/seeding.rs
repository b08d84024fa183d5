//! Deterministic derivation of per-iteration and per-query RNG streams.

/// SplitMix64 finalizer; a cheap, well-mixed 64-bit hash.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Derives an independent stream seed from a base seed and a stream index.
pub(crate) fn derive_seed(base: u64, stream: u64) -> u64 {
    splitmix64(splitmix64(base).wrapping_add(stream))
}

/// Derives a seed from a base seed and two stream indices.
pub(crate) fn derive_seed2(base: u64, a: u64, b: u64) -> u64 {
    derive_seed(derive_seed(base, a), b)
}

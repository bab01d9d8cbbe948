//! Deterministic fan-out for independent trials.
//!
//! `map_indexed` evaluates `f(0), ..., f(n-1)` and collects the results in
//! index order, on the rayon pool when the `parallel` feature is enabled
//! and `parallel` is true, sequentially otherwise. Output never depends on
//! the execution mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<R: Send>(
    parallel: bool,
    n: usize,
    f: impl Fn(usize) -> R + Sync + Send,
) -> Vec<R> {
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<R: Send>(
    _parallel: bool,
    n: usize,
    f: impl Fn(usize) -> R + Sync + Send,
) -> Vec<R> {
    (0..n).map(f).collect()
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-task seed derived from the root seed, a lane constant identifying
/// the suite, and the task index. Fixed inputs give a fixed output, so
/// suites are reproducible under any degree of concurrency.
pub(crate) fn derive_seed(root: u64, lane: u64, index: u64) -> u64 {
    splitmix64(splitmix64(root ^ splitmix64(lane)) ^ index)
}

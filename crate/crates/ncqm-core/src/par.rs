//! Work distribution for the verification sweeps.
//!
//! Every sweep is an index-parametrised map: item i draws from its own
//! seeded stream and the results are collected in index order, so the
//! sequential and parallel paths produce byte-identical reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Runtime choice between the two execution paths. `Parallel` falls back to
/// the sequential path when the crate is built without the `parallel`
/// feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    Parallel,
}

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Execution::Sequential => (0..n).map(f).collect(),
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    let _ = exec;
    (0..n).map(f).collect()
}

/// FNV-1a mix of the master seed with a check label, so each check owns an
/// independent stream no matter how the suites are reordered.
pub(crate) fn sub_seed(master: u64, label: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in master.to_le_bytes().iter().chain(label.as_bytes()) {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// The stream for item `index` of a check.
pub(crate) fn index_rng(check_seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(check_seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

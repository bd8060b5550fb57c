//! Parallel drivers over the pure computations of `monres-core`.
//!
//! Work items are independent; results are collected in input order, so
//! output does not depend on the number of threads.

use monres_core::oracle::{merge, MultigradedBetti, OracleConfig, StrandBox};
use monres_core::pluricirculant::{compare_betti, BettiComparison};
use monres_core::{MonomialIdeal, Result};
use rayon::prelude::*;

/// [`monres_core::oracle::betti_oracle`] with strands evaluated in parallel.
pub fn betti_oracle_par(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<MultigradedBetti> {
    let sbox = StrandBox::new(ideal, config.budget)?;
    let parts: Vec<_> = (0..sbox.len())
        .into_par_iter()
        .filter(|&at| sbox.contains(at))
        .map(|at| (at, sbox.betti_at(at, config.field)))
        .filter(|(_, dims)| !dims.is_empty())
        .collect();
    Ok(merge(&sbox, parts))
}

/// `compare_betti` for every `1 <= t <= n <= n_max`, ordered by `(n, t)`.
pub fn scan_comparisons(n_max: u32) -> Result<Vec<BettiComparison>> {
    let grid: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (1..=n).map(move |t| (n, t))).collect();
    grid.into_par_iter().map(|(n, t)| compare_betti(n, t)).collect()
}

/// Runs `f` on a pool of `jobs` threads; `0` keeps the global pool.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

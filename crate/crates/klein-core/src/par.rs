//! Data-parallel helpers with a sequential fallback.
//!
//! Everything in this crate that fans out over independent work items
//! (piece-pairwise cone LPs, word enumeration branches, deformation grid
//! points, Monte Carlo batches) goes through these wrappers.  With the
//! `parallel` feature (default) they dispatch to rayon; without it they
//! run sequentially.  Both paths return results in input order, so
//! downstream aggregation is deterministic regardless of schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered map over a slice.
pub fn map_slice<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Ordered map over `0..n`.
pub fn map_range<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Count indices in `0..n` satisfying `pred`.
pub fn count_range(n: usize, pred: impl Fn(usize) -> bool + Sync + Send) -> usize {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter(|&i| pred(i)).count()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter(|&i| pred(i)).count()
    }
}

/// Always-sequential variants, kept alive so the criterion suite can
/// benchmark the parallel path against the same code run serially.
pub mod seq {
    pub fn map_slice<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
        items.iter().map(f).collect()
    }

    pub fn map_range<U>(n: usize, f: impl Fn(usize) -> U) -> Vec<U> {
        (0..n).map(f).collect()
    }

    pub fn count_range(n: usize, pred: impl Fn(usize) -> bool) -> usize {
        (0..n).filter(|&i| pred(i)).count()
    }
}

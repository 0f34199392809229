//! Execution helpers for the exhaustive sweeps.
//!
//! With the `parallel` feature these fan work out over rayon; otherwise they
//! are plain sequential loops. Results are merged deterministically: the
//! reported failure is always the one with the smallest case index, so both
//! modes produce identical certificates.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `check` to every item; return the failure for the earliest item, if any.
pub(crate) fn first_failure<T, R, F>(items: &[T], check: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .enumerate()
            .filter_map(|(i, t)| check(t).map(|r| (i, r)))
            .min_by_key(|(i, _)| *i)
            .map(|(_, r)| r)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(check)
    }
}

/// Map every item, preserving order.
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// True when this build dispatches sweeps through rayon.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

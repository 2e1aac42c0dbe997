//! Thin switch between rayon and sequential iteration.
//!
//! Every parallel reduction in the crate works on integer counts or on
//! per-index results collected in order, so the output never depends on
//! which branch is compiled in or on the number of worker threads.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn sort_f64(values: &mut [f64]) {
    use rayon::prelude::*;
    values.par_sort_unstable_by(f64::total_cmp);
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sort_f64(values: &mut [f64]) {
    values.sort_unstable_by(f64::total_cmp);
}

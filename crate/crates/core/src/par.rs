//! Parallel-or-sequential dispatch. With the `parallel` feature the mapped
//! closures run on the rayon pool; without it the same helpers degrade to
//! plain iteration, so callers are written once.

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Always-sequential twin of [`map_indices`].
pub(crate) fn map_indices_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Send + Sync,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    F: Fn(&I) -> T,
{
    items.iter().map(f).collect()
}

pub(crate) fn map_slice_seq<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    F: Fn(&I) -> T,
{
    items.iter().map(f).collect()
}

//! Batch evaluation helpers for parameter sweeps and curve sampling.
//!
//! With the `parallel` feature (default) the mapping functions fan out over
//! rayon's global pool; without it they degrade to plain sequential
//! iteration. The `_seq` variants are always sequential and exist so callers
//! (and the bench suite) can compare both paths. Outputs preserve input
//! order either way, so results are identical bit for bit.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, preserving index order.
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential counterpart of [`map_indices`].
pub fn map_indices_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving element order.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential counterpart of [`map_slice`].
pub fn map_slice_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt().sin();
        assert_eq!(map_indices(1000, f), map_indices_seq(1000, f));
        let xs: Vec<f64> = (0..500).map(|i| i as f64 * 0.1).collect();
        let g = |x: &f64| x.exp().ln_1p();
        assert_eq!(map_slice(&xs, g), map_slice_seq(&xs, g));
    }

    #[test]
    fn empty_inputs() {
        assert!(map_indices(0, |i| i).is_empty());
        assert!(map_slice::<f64, f64, _>(&[], |x| *x).is_empty());
    }
}

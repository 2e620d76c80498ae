//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! global pool. Without it, `Parallel` silently degrades to the sequential
//! path, so callers never need their own `cfg` gates.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// `max` that propagates NaN instead of discarding it.
#[inline]
pub fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

impl Exec {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_index<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Maximum of `f` over `items` (0 for an empty slice). Max is
    /// order-independent, so both paths return bit-identical results.
    pub fn max_of<T, F>(self, items: &[T], f: F) -> f64
    where
        T: Sync,
        F: Fn(&T) -> f64 + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).reduce(|| 0.0, nan_max),
            _ => items.iter().map(f).fold(0.0, nan_max),
        }
    }

    /// Fills `out` chunk by chunk; `f(chunk_index, chunk)`.
    pub fn for_each_chunk<T, F>(self, out: &mut [T], chunk: usize, f: F)
    where
        T: Send,
        F: Fn(usize, &mut [T]) + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => out.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c)),
            _ => out.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.37).sin()).collect();
        let a = Exec::Sequential.max_of(&xs, |x| x.abs());
        let b = Exec::Parallel.max_of(&xs, |x| x.abs());
        assert_eq!(a, b);
        assert_eq!(
            Exec::Sequential.map_index(50, |i| i * i),
            Exec::Parallel.map_index(50, |i| i * i)
        );
    }

    #[test]
    fn nan_is_not_swallowed() {
        let xs = [1.0, f64::NAN, 3.0];
        assert!(Exec::Sequential.max_of(&xs, |x| *x).is_nan());
        assert!(Exec::Parallel.max_of(&xs, |x| *x).is_nan());
    }

    #[test]
    fn chunked_fill() {
        let mut v = vec![0usize; 12];
        Exec::Parallel.for_each_chunk(&mut v, 4, |ci, c| c.iter_mut().for_each(|x| *x = ci));
        assert_eq!(v, vec![0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2]);
    }
}

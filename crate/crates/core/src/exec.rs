//! Execution mode for the data-parallel inner loops (quadrature sums and
//! sweeps over sample points).
//!
//! Reductions are always performed over fixed-size chunks whose partial sums
//! are combined in index order, so results are bit-identical between the
//! sequential and the parallel mode and across runs.

use serde::{Deserialize, Serialize};

/// Number of consecutive terms summed sequentially inside one chunk.
pub const REDUCTION_CHUNK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise falls back
    /// to sequential execution.
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

impl Exec {
    /// Whether this mode actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Maps `f` over a slice, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.map_range(items.len(), |i| f(&items[i]))
    }

    /// Deterministic reduction of `term(0) + … + term(n-1)`.
    ///
    /// Terms are accumulated into chunks of [`REDUCTION_CHUNK`] in order, and
    /// the chunk sums are then folded left to right.
    pub fn sum<M, Z, F, A>(self, n: usize, zero: Z, term: F, add: A) -> M
    where
        M: Send,
        Z: Fn() -> M + Sync + Send,
        F: Fn(usize) -> M + Sync + Send,
        A: Fn(&mut M, M) + Sync + Send,
    {
        let chunks = n.div_ceil(REDUCTION_CHUNK);
        let partials = self.map_range(chunks, |c| {
            let mut acc = zero();
            let end = ((c + 1) * REDUCTION_CHUNK).min(n);
            for i in c * REDUCTION_CHUNK..end {
                add(&mut acc, term(i));
            }
            acc
        });
        let mut total = zero();
        for p in partials {
            add(&mut total, p);
        }
        total
    }

    /// Fallible variant of [`Exec::sum`]; the first error in index order wins.
    pub fn try_sum<M, E, Z, F, A>(self, n: usize, zero: Z, term: F, add: A) -> Result<M, E>
    where
        M: Send,
        E: Send,
        Z: Fn() -> M + Sync + Send,
        F: Fn(usize) -> Result<M, E> + Sync + Send,
        A: Fn(&mut M, M) + Sync + Send,
    {
        let chunks = n.div_ceil(REDUCTION_CHUNK);
        let partials = self.map_range(chunks, |c| -> Result<M, E> {
            let mut acc = zero();
            let end = ((c + 1) * REDUCTION_CHUNK).min(n);
            for i in c * REDUCTION_CHUNK..end {
                add(&mut acc, term(i)?);
            }
            Ok(acc)
        });
        let mut total = zero();
        for p in partials {
            add(&mut total, p?);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_sums_are_bit_identical() {
        let term = |i: usize| ((i as f64) * 0.37).sin() / (1.0 + i as f64);
        let add = |a: &mut f64, b: f64| *a += b;
        let s = Exec::Sequential.sum(10_007, || 0.0, term, add);
        let p = Exec::Parallel.sum(10_007, || 0.0, term, add);
        assert_eq!(s.to_bits(), p.to_bits());
    }

    #[test]
    fn map_preserves_order() {
        let v = Exec::Parallel.map_range(1000, |i| i * 2);
        assert!(v.iter().enumerate().all(|(i, &x)| x == 2 * i));
    }

    #[test]
    fn try_sum_reports_error() {
        let r: Result<f64, String> = Exec::Parallel.try_sum(
            500,
            || 0.0,
            |i| if i == 321 { Err(format!("bad {i}")) } else { Ok(1.0) },
            |a, b| *a += b,
        );
        assert_eq!(r.unwrap_err(), "bad 321");
        let ok: Result<f64, String> =
            Exec::Sequential.try_sum(0, || 0.0, |_| Ok(1.0), |a, b| *a += b);
        assert_eq!(ok.unwrap(), 0.0);
    }
}

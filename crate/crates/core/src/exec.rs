//! Execution strategy for the data-parallel loops (ladder scans, candidate
//! sampling, per-row classification).
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on rayon;
//! without it every strategy runs sequentially. Results never depend on the
//! strategy: maps preserve input order and searches return the lowest
//! matching index.

use std::ops::Range;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

/// Indices handed to a rayon worker at once in [`Exec::find_first`].
#[cfg(feature = "parallel")]
const BLOCK: u64 = 1024;

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Smallest index in `range` for which `f` returns `Some`, with its value.
    pub fn find_first<U, F>(self, range: Range<u64>, f: F) -> Option<(u64, U)>
    where
        U: Send,
        F: Fn(u64) -> Option<U> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            // Blocks are scanned sequentially inside, in parallel across, and
            // `find_map_first` keeps the lowest block that produced a hit.
            let start = range.start;
            let blocks = (range.end - start).div_ceil(BLOCK);
            return (0..blocks).into_par_iter().find_map_first(|b| {
                let lo = start + b * BLOCK;
                let hi = (lo + BLOCK).min(range.end);
                (lo..hi).find_map(|i| f(i).map(|u| (i, u)))
            });
        }
        range.into_iter().find_map(|i| f(i).map(|u| (i, u)))
    }

    /// Counts indices in `range` satisfying `f`.
    pub fn count<F>(self, range: Range<u64>, f: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return range.into_par_iter().filter(|&i| f(i)).count() as u64;
        }
        range.filter(|&i| f(i)).count() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let pred = |i: u64| (i > 3000 && i % 4999 == 4321).then_some(i * 2);
        let seq = Exec::Sequential.find_first(0..50_000, pred);
        let par = Exec::Parallel.find_first(0..50_000, pred);
        assert_eq!(seq, par);
        assert!(seq.is_some());
        assert_eq!(Exec::Parallel.find_first(5..5, pred), None);

        let v: Vec<u64> = (0..1000).collect();
        assert_eq!(
            Exec::Sequential.map(v.clone(), |x| x * 3),
            Exec::Parallel.map(v, |x| x * 3)
        );
        assert_eq!(
            Exec::Sequential.count(0..10_000, |i| i % 7 == 0),
            Exec::Parallel.count(0..10_000, |i| i % 7 == 0)
        );
    }
}

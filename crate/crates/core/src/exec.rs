//! Sequential / data-parallel execution switch.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! on the rayon global pool. Without it every request runs sequentially,
//! so callers never need their own `cfg` gates.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `f(0), f(1), .., f(len - 1)` in index order.
    pub fn map_range<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// `f` over a slice, results in slice order.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        self.map_range(items.len(), |i| f(&items[i]))
    }
}

pub fn num_threads() -> usize {
    #[cfg(feature = "parallel")]
    let result = rayon::current_num_threads();
    #[cfg(not(feature = "parallel"))]
    let result = 1;
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let seq = Execution::Sequential.map_range(100, |i| i * i);
        let par = Execution::Parallel.map_range(100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
        let words = ["a", "bb", "ccc"];
        assert_eq!(Execution::Parallel.map_slice(&words, |w| w.len()), vec![1, 2, 3]);
    }

    #[test]
    fn default_tracks_feature() {
        assert_eq!(Execution::default().is_parallel(), cfg!(feature = "parallel"));
        assert!(!Execution::Sequential.is_parallel());
        assert!(num_threads() >= 1);
    }
}

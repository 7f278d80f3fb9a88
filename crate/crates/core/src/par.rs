//! Sequential and data-parallel execution of independent per-item work.
//!
//! Results always come back in input order, so reports built from them do
//! not depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon work-stealing when the `parallel` feature is enabled, otherwise
    /// identical to `Sequential`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => items.iter().map(f).collect(),
        }
    }

    /// `true` when `Parallel` actually runs on a thread pool.
    pub const fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

//! Data-parallel execution with a sequential fallback.
//!
//! Every parallel map in the crate goes through [`Exec::map`], which preserves
//! input order so that results are identical whichever strategy runs. With the
//! `parallel` feature disabled, [`Exec::Parallel`] silently runs sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel,
}

impl Exec {
    /// `jobs <= 1` means sequential.
    pub fn from_jobs(jobs: usize) -> Self {
        if jobs > 1 {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }
}

/// Runs `f` inside a rayon pool with `jobs` threads (or directly when
/// sequential or when the `parallel` feature is off).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

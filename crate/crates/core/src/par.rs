//! Order-preserving data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature the work runs on a rayon pool; without it, or
//! with one worker, it runs inline. Output order always matches input order,
//! so results never depend on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
    workers: usize,
}

impl Executor {
    /// `workers == 0` uses every available core; `1` runs sequentially.
    pub fn new(workers: usize) -> Self {
        #[cfg(feature = "parallel")]
        {
            let pool = match workers {
                1 => None,
                0 => rayon::ThreadPoolBuilder::new().build().ok(),
                w => rayon::ThreadPoolBuilder::new().num_threads(w).build().ok(),
            };
            let workers = pool.as_ref().map_or(1, |p| p.current_num_threads());
            Executor { pool, workers }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = workers;
            Executor { workers: 1 }
        }
    }

    pub fn sequential() -> Self {
        Executor::new(1)
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Executor({} workers)", self.workers)
    }
}

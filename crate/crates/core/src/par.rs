//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature and `jobs > 1`, work runs on a dedicated rayon
//! pool of `jobs` threads; otherwise it runs in order on the caller's thread.
//! Results always come back in input order.

/// Apply `f` to every item, preserving order.
pub fn map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

/// Whether this build can run work in parallel.
pub const fn available() -> bool {
    cfg!(feature = "parallel")
}

//! Ordered map over independent work units. With the `parallel` feature the
//! units are evaluated on a rayon pool; results always come back in input
//! order, so parallel and sequential runs produce identical streams.

/// Sequential evaluation, kept unconditionally for benchmarks and as the
/// reference path.
pub fn map_sequential<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// `jobs = 0` means the default pool size; `jobs = 1` is sequential.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, U, F>(items: &[T], jobs: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        1 => map_sequential(items, f),
        0 => items.par_iter().map(f).collect(),
        n => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("rayon pool");
            pool.install(|| items.par_iter().map(f).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, U, F>(items: &[T], _jobs: usize, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    map_sequential(items, f)
}

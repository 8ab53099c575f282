//! Order-preserving map over a slice, on a rayon pool when enabled.

/// Applies `f` to every item, keeping input order. `threads == 1` (or a
/// build without the `parallel` feature) runs sequentially; `0` means one
/// worker per available core.
#[cfg(feature = "parallel")]
pub fn ordered_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if threads == 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn ordered_map<T, R, F>(items: &[T], _threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_order_for_any_thread_count() {
        let xs: Vec<u64> = (0..100).collect();
        let seq = ordered_map(&xs, 1, |x| x * x);
        for threads in [0, 2, 3] {
            assert_eq!(ordered_map(&xs, threads, |x| x * x), seq);
        }
    }
}

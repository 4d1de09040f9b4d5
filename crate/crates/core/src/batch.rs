//! Order-preserving parallel evaluation with a fixed worker count.

use rayon::prelude::*;

/// Applies `f` to every item on `workers` threads, returning results in
/// input order, so output never depends on the worker count.
pub fn par_map<T, R, F>(workers: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kept() {
        let items: Vec<u64> = (0..200).collect();
        let one = par_map(1, &items, |x| x * x);
        let four = par_map(4, &items, |x| x * x);
        assert_eq!(one, four);
        assert_eq!(one[13], 169);
    }
}

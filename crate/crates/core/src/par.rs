//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, [`Jobs::Parallel`] runs on rayon; without it
//! every map is sequential. Results are always returned in input order, so
//! output never depends on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch of independent work items is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Jobs {
    /// Plain iterator on the calling thread.
    Sequential,
    /// Rayon's global pool.
    #[default]
    Parallel,
    /// A dedicated pool with this many workers.
    Threads(usize),
}

impl Jobs {
    /// `--jobs N` convention: 0 means the default pool, 1 means sequential.
    pub fn from_count(n: usize) -> Jobs {
        match n {
            0 => Jobs::Parallel,
            1 => Jobs::Sequential,
            n => Jobs::Threads(n),
        }
    }
}

pub fn map<T, R, F>(jobs: Jobs, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match jobs {
        Jobs::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Jobs::Parallel => items.par_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Jobs::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.par_iter().map(f).collect(),
        },
        #[cfg(not(feature = "parallel"))]
        _ => items.iter().map(f).collect(),
    }
}

/// Maps over `0..n` in fixed-size chunks and concatenates the results in
/// index order.
pub fn map_range_chunks<R, F>(jobs: Jobs, n: u64, chunk: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<u64>) -> Vec<R> + Sync + Send,
{
    let chunk = chunk.max(1);
    let ranges: Vec<std::ops::Range<u64>> = (0..n.div_ceil(chunk))
        .map(|c| c * chunk..((c + 1) * chunk).min(n))
        .collect();
    map(jobs, &ranges, |r| f(r.clone())).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_jobs() {
        let xs: Vec<u64> = (0..1000).collect();
        let seq = map(Jobs::Sequential, &xs, |x| x * x);
        assert_eq!(map(Jobs::Parallel, &xs, |x| x * x), seq);
        assert_eq!(map(Jobs::Threads(4), &xs, |x| x * x), seq);
    }

    #[test]
    fn chunks_cover_range() {
        let got = map_range_chunks(Jobs::Threads(3), 103, 10, |r| r.collect());
        assert_eq!(got, (0..103).collect::<Vec<u64>>());
        assert!(map_range_chunks(Jobs::Parallel, 0, 10, |r| r.collect::<Vec<_>>()).is_empty());
    }
}

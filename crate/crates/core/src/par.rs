//! Data-parallel helpers that fall back to plain iterators when the
//! `parallel` feature is off, or when a caller asks for sequential runs.

use serde::{Deserialize, Serialize};

/// How batch work is scheduled. Results never depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// `true` if work will actually fan out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Preferred batch length for chunked sampling loops.
    pub fn batch_len(self) -> usize {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return 4 * rayon::current_num_threads().max(1);
        }
        8
    }
}

/// Order-preserving map.
pub fn map_collect<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over an index range.
pub fn map_range<R, F>(exec: Execution, range: std::ops::Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && range.len() > 1 {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Index of the first item (in slice order) satisfying `pred`.
pub fn position_first<T, F>(exec: Execution, items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().position_first(pred);
    }
    let _ = exec;
    items.iter().position(pred)
}

/// `true` if any index in the range satisfies `pred`.
pub fn any_in_range<F>(exec: Execution, range: std::ops::Range<usize>, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && range.len() > 1 {
        use rayon::prelude::*;
        return range.into_par_iter().any(pred);
    }
    let _ = exec;
    range.into_iter().any(pred)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = map_collect(Execution::Parallel, &items, |x| x * x);
        let b = map_collect(Execution::Sequential, &items, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(
            position_first(Execution::Parallel, &items, |&x| x > 500 && x % 7 == 0),
            position_first(Execution::Sequential, &items, |&x| x > 500 && x % 7 == 0),
        );
        assert_eq!(
            map_range(Execution::Parallel, 0..50, |i| i + 1),
            (1..51).collect::<Vec<_>>()
        );
        assert!(any_in_range(Execution::Parallel, 0..100, |i| i == 99));
        assert!(!any_in_range(Execution::Sequential, 0..100, |i| i == 100));
    }
}

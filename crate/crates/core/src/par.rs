//! Sequential and data-parallel execution of the search loops.
//!
//! With the `parallel` feature disabled, [`Execution::Parallel`] runs the
//! sequential code path, so results never depend on the feature set.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Self::Parallel
        } else {
            Self::Sequential
        }
    }
}

/// First `Some` in range order, like `Iterator::find_map`.
pub fn find_map_first<T, F>(exec: Execution, range: RangeInclusive<u64>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().find_map_first(f),
        _ => range.into_iter().find_map(f),
    }
}

/// Maps `f` over `range` and concatenates the outputs in range order.
pub fn flat_map_collect<T, F>(exec: Execution, range: RangeInclusive<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Vec<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().flat_map_iter(f).collect(),
        _ => range.into_iter().flat_map(f).collect(),
    }
}

/// Like [`find_map_first`] over a slice of indices `0..len`.
pub fn find_map_first_index<T, F>(exec: Execution, len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..len).into_par_iter().find_map_first(f),
        _ => (0..len).find_map(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(find_map_first(exec, 1..=100, |k| (k % 7 == 0).then_some(k)), Some(7));
            assert_eq!(flat_map_collect(exec, 1..=4, |k| vec![k; k as usize]).len(), 10);
            assert_eq!(find_map_first_index(exec, 10, |i| (i > 3).then_some(i)), Some(4));
        }
    }
}

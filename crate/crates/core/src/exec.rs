//! Execution strategy for the data-parallel kernels.
//!
//! Every kernel that loops over independent roots (vertices, edges, subset
//! prefixes) goes through the helpers here. With the `parallel` feature the
//! work is spread over the rayon pool; without it, or when [`Exec::Sequential`]
//! is requested, the same closures run in a plain loop. Reductions are
//! associative and commutative over integers, so results never depend on the
//! strategy or the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Falls back to [`Exec::Sequential`] when built without `parallel`.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps every index in `0..len` and folds the results with `reduce`.
pub fn map_reduce<T, M, R>(exec: Exec, len: usize, identity: T, map: M, reduce: R) -> T
where
    T: Send + Sync + Clone,
    M: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len)
            .into_par_iter()
            .map(&map)
            .reduce(|| identity.clone(), &reduce);
    }
    let _ = exec;
    (0..len).map(map).fold(identity, reduce)
}

/// Sum of `map(i)` over `0..len`.
pub fn sum_u128<M>(exec: Exec, len: usize, map: M) -> u128
where
    M: Fn(usize) -> u128 + Sync + Send,
{
    map_reduce(exec, len, 0u128, map, |a, b| a + b)
}

/// Returns the result for the smallest index whose closure yields `Some`.
pub fn find_map_first<T, M>(exec: Exec, len: usize, map: M) -> Option<T>
where
    T: Send,
    M: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().find_map_first(&map);
    }
    let _ = exec;
    (0..len).find_map(map)
}

/// Collects `map(i)` for every index, preserving index order.
pub fn map_collect<T, M>(exec: Exec, len: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(&map).collect();
    }
    let _ = exec;
    (0..len).map(map).collect()
}

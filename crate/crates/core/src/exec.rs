//! Parallel/sequential dispatch.
//!
//! With the `parallel` feature the workloads fan out on the rayon pool;
//! without it they run sequentially. Both paths map in input order and
//! reduce with order-independent total orders, so results are identical
//! regardless of feature set or thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, preserving index order in the output.
pub(crate) fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

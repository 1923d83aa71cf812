//! Exhaustive verification sweeps over index ranges.
//!
//! Axiom checks iterate disjoint index ranges with no coordination, so they
//! parallelize freely. With the `parallel` feature the sweeps run on rayon;
//! without it they run sequentially. Both paths report the smallest-index
//! violation so output is deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `check` over `0..n` and returns the smallest index at which it
/// reports a violation, if any.
pub fn first_violation<F, W>(n: usize, check: F) -> Option<W>
where
    F: Fn(usize) -> Option<W> + Sync + Send,
    W: Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(|i| check(i).map(|w| (i, w)))
            .min_by_key(|(i, _)| *i)
            .map(|(_, w)| w)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_violation_seq(n, check)
    }
}

/// Sequential twin of [`first_violation`]; always available so benchmarks can
/// compare the two paths in one binary.
pub fn first_violation_seq<F, W>(n: usize, check: F) -> Option<W>
where
    F: Fn(usize) -> Option<W>,
{
    (0..n).find_map(check)
}

/// Maps `0..n` and collects the results in index order.
pub fn map_indexed<F, T>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_smallest_violation() {
        let check = |i: usize| if i % 7 == 3 { Some(i) } else { None };
        assert_eq!(first_violation(100, check), Some(3));
        assert_eq!(first_violation_seq(100, check), Some(3));
        assert_eq!(first_violation(3, check), None);
    }
}

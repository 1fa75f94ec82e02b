//! Dispatch for independent verification cases. Every case is pure, so
//! parallel and sequential evaluation must agree; the suites are run both
//! ways in the benches to keep that claim honest.

/// Applies `f` to each case in order. With the `parallel` feature
/// compiled in and `parallel` set, cases run on the rayon pool; the
/// result order is the input order either way. Without the feature the
/// flag is accepted and ignored.
pub fn map_cases<T, R, F>(cases: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return cases.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    cases.into_iter().map(f).collect()
}

//! Data-parallel batch helpers.
//!
//! All Monte-Carlo style loops in the crate (property suites, boundary
//! sampling, acceptance sweeps) funnel through [`batch_map`]. With the
//! `parallel` feature (default) it fans out over rayon; without it the same
//! call degrades to a plain sequential map. [`batch_map_seq`] is always
//! compiled so benchmarks can compare the two paths in one binary.
//!
//! Determinism contract: the closure receives only the trial index, so the
//! result vector is identical whichever path runs.

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is on.
pub fn batch_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential reference path for [`batch_map`].
pub fn batch_map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Folds the per-trial residuals of a batch down to their maximum.
///
/// `NaN` residuals are promoted to `+inf` so a broken trial can never make a
/// suite look healthy.
pub fn max_residual<F>(trials: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    batch_map(trials, f)
        .into_iter()
        .fold(0.0_f64, |acc, r| if r.is_nan() { f64::INFINITY } else { acc.max(r) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt().sin();
        assert_eq!(batch_map(1000, f), batch_map_seq(1000, f));
    }

    #[test]
    fn nan_residual_poisons_the_max() {
        let worst = max_residual(10, |i| if i == 3 { f64::NAN } else { 0.0 });
        assert!(worst.is_infinite());
    }
}

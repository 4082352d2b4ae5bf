//! Monotone scalar root-finding: geometric bracketing plus bisection.
//!
//! Every norm and constraint solve in this crate reduces to a root of a
//! monotone function on `[0, inf)`. No derivative-based methods are used;
//! robustness beats speed at desk scale.

use crate::config::SolverConfig;
use crate::error::{Error, Result};

/// Solves `f(t) = target` for a nondecreasing `f` on `t >= 0`.
///
/// `[lo, hi]` is an initial guess that is grown (`hi`) or shrunk (`lo`)
/// geometrically until it brackets the target. `f` may return `+inf`, which
/// counts as "above target". Fails with [`Error::BracketFailure`] when no
/// bracket emerges within `cfg.max_iter` growth steps.
pub fn solve_increasing<F>(f: F, target: f64, lo: f64, hi: f64, cfg: &SolverConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    debug_assert!(lo >= 0.0 && hi > lo);

    let mut steps = 0usize;
    while f(hi) < target {
        hi *= cfg.bracket_growth;
        steps += 1;
        if steps > cfg.max_iter || !hi.is_finite() {
            return Err(Error::BracketFailure { what: what.into(), steps });
        }
    }
    while lo > 0.0 && f(lo) > target {
        lo /= cfg.bracket_growth;
        steps += 1;
        if lo < 1e-300 {
            lo = 0.0;
            break;
        }
        if steps > cfg.max_iter {
            return Err(Error::BracketFailure { what: what.into(), steps });
        }
    }
    if f(lo) > target {
        return Err(Error::BracketFailure { what: what.into(), steps });
    }

    #[cfg(debug_assertions)]
    assert_monotone(&f, lo, hi, what);

    Ok(bisect(&f, target, lo, hi, cfg))
}

/// Solves `f(t) = target` for a nonincreasing `f` on `t > 0`.
pub fn solve_decreasing<F>(f: F, target: f64, lo: f64, hi: f64, cfg: &SolverConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    // A nonincreasing f flipped through negation is nondecreasing, but the
    // lower end of the bracket now needs growing instead of shrinking, so
    // mirror the logic directly.
    let (mut lo, mut hi) = (lo, hi);
    debug_assert!(lo > 0.0 && hi > lo);

    let mut steps = 0usize;
    while f(hi) > target {
        hi *= cfg.bracket_growth;
        steps += 1;
        if steps > cfg.max_iter || !hi.is_finite() {
            return Err(Error::BracketFailure { what: what.into(), steps });
        }
    }
    while f(lo) < target {
        lo /= cfg.bracket_growth;
        steps += 1;
        if steps > cfg.max_iter || lo < 1e-300 {
            return Err(Error::BracketFailure { what: what.into(), steps });
        }
    }

    #[cfg(debug_assertions)]
    assert_monotone(&|t| -f(t), lo, hi, what);

    Ok(bisect(&|t| -f(t), -target, lo, hi, cfg))
}

fn bisect<F>(f: &F, target: f64, mut lo: f64, mut hi: f64, cfg: &SolverConfig) -> f64
where
    F: Fn(f64) -> f64,
{
    for _ in 0..cfg.max_iter.max(60) {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 * mid.abs() + 1e-14 {
            return mid;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Debug-only guard: samples 100 points of the bracket and checks that the
/// function is indeed nondecreasing (up to floating noise) before bisecting.
#[cfg(debug_assertions)]
fn assert_monotone<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, what: &str) {
    let mut prev = f64::NEG_INFINITY;
    for k in 0..=100 {
        let t = lo + (hi - lo) * (k as f64) / 100.0;
        let v = f(t);
        if v.is_nan() {
            continue;
        }
        let slack = 1e-9 * (1.0 + v.abs().min(1e12));
        debug_assert!(
            v >= prev - slack,
            "{what}: not monotone on bracket at t={t}: {v} < {prev}"
        );
        prev = prev.max(v);
    }
}

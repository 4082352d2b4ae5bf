//! Solver configuration shared by every root-finding and sampling routine.

use serde::{Deserialize, Serialize};

/// Fixed default seed so that every randomized suite is reproducible
/// out of the box.
pub const DEFAULT_SEED: u64 = 42;

/// Tolerances, iteration caps and bracketing parameters.
///
/// The defaults match the tolerances the property suites assert against;
/// loosening them will make suites fail, tightening them only costs time.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Absolute tolerance for scalar root-finding.
    pub abs_tol: f64,
    /// Iteration cap for bracketing and bisection.
    pub max_iter: usize,
    /// Geometric growth factor used when bracketing a root.
    pub bracket_growth: f64,
    /// Absolute tolerance for adaptive quadrature.
    pub quad_tol: f64,
    /// Tolerance for the approximate infimal convolution.
    pub inf_conv_tol: f64,
    /// Scale cap when probing absorption; gauge values beyond this are
    /// reported as infinite.
    pub alpha_max: f64,
    /// Seed for every randomized property suite.
    pub rng_seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_iter: 200,
            bracket_growth: 2.0,
            quad_tol: 1e-9,
            inf_conv_tol: 1e-3,
            alpha_max: 1e9,
            rng_seed: DEFAULT_SEED,
        }
    }
}

impl SolverConfig {
    /// Validates the invariants the solvers rely on.
    pub fn validate(&self) -> crate::Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(crate::Error::Domain("abs_tol must be positive".into()));
        }
        if self.max_iter < 1 {
            return Err(crate::Error::Domain("max_iter must be >= 1".into()));
        }
        if !(self.bracket_growth > 1.0) {
            return Err(crate::Error::Domain("bracket_growth must be > 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        SolverConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_growth() {
        let cfg = SolverConfig {
            bracket_growth: 1.0,
            ..SolverConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}

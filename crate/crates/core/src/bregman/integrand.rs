//! Scalar convex integrands and their conjugates.
//!
//! A separable functional `F(y) = sum_i f(y_i)` is described by its scalar
//! piece `f`. The trait exposes one-sided derivatives so that subdifferential
//! calculus works for non-differentiable `f` (such as `|t|`) and at domain
//! boundaries (such as the KL integrand at 0).

/// Closed convex scalar function with derivatives and conjugate.
///
/// Conventions: `eval` returns `+inf` outside the effective domain;
/// `left_deriv` is `-inf` at the left domain endpoint and `right_deriv`
/// `+inf` at the right one.
pub trait ConvexIntegrand: Sync {
    fn eval(&self, t: f64) -> f64;
    fn left_deriv(&self, t: f64) -> f64;
    fn right_deriv(&self, t: f64) -> f64;
    /// Second derivative where it exists.
    fn second_deriv(&self, t: f64) -> f64;
    /// Fenchel conjugate `f*(x) = sup_t { t x - f(t) }`.
    fn conjugate(&self, x: f64) -> f64;
    /// Derivative of the conjugate where it exists.
    fn conjugate_deriv(&self, x: f64) -> f64;
    /// Effective domain endpoints of `f`.
    fn domain(&self) -> (f64, f64);

    /// Gradient at a differentiable point.
    fn deriv(&self, t: f64) -> f64 {
        self.right_deriv(t)
    }

    /// Subdifferential interval at `t`, `None` when empty.
    fn subgradient(&self, t: f64) -> Option<(f64, f64)> {
        if !self.eval(t).is_finite() {
            return None;
        }
        let lo = self.left_deriv(t);
        let hi = self.right_deriv(t);
        if hi == f64::NEG_INFINITY || lo == f64::INFINITY {
            return None;
        }
        Some((lo, hi))
    }
}

/// KL integrand `f(t) = t (ln t - 1)` on `t >= 0`, with `0 ln 0 = 0`.
///
/// Conjugate: `f*(x) = e^x`. The subdifferential at 0 is empty (the slope
/// runs off to `-inf`), which is what makes `D_F[., z] = inf` whenever `z`
/// has a zero coordinate.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kl;

impl ConvexIntegrand for Kl {
    fn eval(&self, t: f64) -> f64 {
        if t > 0.0 {
            t * (t.ln() - 1.0)
        } else if t == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }

    fn left_deriv(&self, t: f64) -> f64 {
        if t > 0.0 {
            t.ln()
        } else {
            f64::NEG_INFINITY
        }
    }

    fn right_deriv(&self, t: f64) -> f64 {
        if t > 0.0 {
            t.ln()
        } else {
            f64::NEG_INFINITY
        }
    }

    fn second_deriv(&self, t: f64) -> f64 {
        1.0 / t
    }

    fn conjugate(&self, x: f64) -> f64 {
        x.exp()
    }

    fn conjugate_deriv(&self, x: f64) -> f64 {
        x.exp()
    }

    fn domain(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }
}

/// Quadratic integrand `f(t) = t^2 / 2`; self-conjugate.
#[derive(Debug, Clone, Copy, Default)]
pub struct Quadratic;

impl ConvexIntegrand for Quadratic {
    fn eval(&self, t: f64) -> f64 {
        0.5 * t * t
    }

    fn left_deriv(&self, t: f64) -> f64 {
        t
    }

    fn right_deriv(&self, t: f64) -> f64 {
        t
    }

    fn second_deriv(&self, _t: f64) -> f64 {
        1.0
    }

    fn conjugate(&self, x: f64) -> f64 {
        0.5 * x * x
    }

    fn conjugate_deriv(&self, x: f64) -> f64 {
        x
    }

    fn domain(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// `phi(u) = (1+u) ln(1+u) - u` on `u >= -1`, with `phi(-1) = 1`.
///
/// This is the KL divergence density in the change of variables
/// `u = y/z - 1`; its conjugate is [`PhiStar`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Phi;

impl Phi {
    #[inline]
    pub fn value(u: f64) -> f64 {
        if u > -1.0 {
            (1.0 + u) * u.ln_1p() - u
        } else if u == -1.0 {
            1.0
        } else {
            f64::INFINITY
        }
    }
}

impl ConvexIntegrand for Phi {
    fn eval(&self, u: f64) -> f64 {
        Self::value(u)
    }

    fn left_deriv(&self, u: f64) -> f64 {
        if u > -1.0 {
            u.ln_1p()
        } else {
            f64::NEG_INFINITY
        }
    }

    fn right_deriv(&self, u: f64) -> f64 {
        if u > -1.0 {
            u.ln_1p()
        } else {
            f64::NEG_INFINITY
        }
    }

    fn second_deriv(&self, u: f64) -> f64 {
        1.0 / (1.0 + u)
    }

    fn conjugate(&self, x: f64) -> f64 {
        PhiStar::value(x)
    }

    fn conjugate_deriv(&self, x: f64) -> f64 {
        x.exp_m1()
    }

    fn domain(&self) -> (f64, f64) {
        (-1.0, f64::INFINITY)
    }
}

/// `phi*(x) = e^x - 1 - x`, the dual KL divergence density.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhiStar;

impl PhiStar {
    #[inline]
    pub fn value(x: f64) -> f64 {
        x.exp_m1() - x
    }
}

impl ConvexIntegrand for PhiStar {
    fn eval(&self, x: f64) -> f64 {
        Self::value(x)
    }

    fn left_deriv(&self, x: f64) -> f64 {
        x.exp_m1()
    }

    fn right_deriv(&self, x: f64) -> f64 {
        x.exp_m1()
    }

    fn second_deriv(&self, x: f64) -> f64 {
        x.exp()
    }

    fn conjugate(&self, u: f64) -> f64 {
        Phi::value(u)
    }

    fn conjugate_deriv(&self, u: f64) -> f64 {
        if u > -1.0 {
            u.ln_1p()
        } else {
            f64::NAN
        }
    }

    fn domain(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// `f(t) = |t|`: the stock example of a non-strictly-convex integrand whose
/// distance fails to separate points.
#[derive(Debug, Clone, Copy, Default)]
pub struct AbsValue;

impl ConvexIntegrand for AbsValue {
    fn eval(&self, t: f64) -> f64 {
        t.abs()
    }

    fn left_deriv(&self, t: f64) -> f64 {
        if t > 0.0 {
            1.0
        } else if t < 0.0 {
            -1.0
        } else {
            -1.0
        }
    }

    fn right_deriv(&self, t: f64) -> f64 {
        if t > 0.0 {
            1.0
        } else if t < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    fn second_deriv(&self, _t: f64) -> f64 {
        0.0
    }

    fn conjugate(&self, x: f64) -> f64 {
        if x.abs() <= 1.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }

    fn conjugate_deriv(&self, x: f64) -> f64 {
        if x.abs() <= 1.0 {
            0.0
        } else {
            f64::NAN
        }
    }

    fn domain(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

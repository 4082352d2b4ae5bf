//! KL divergence, its dual, generalized Bregman distances, the law of
//! cosines, and cumulant generating functions.

mod integrand;

pub use integrand::{AbsValue, ConvexIntegrand, Kl, Phi, PhiStar, Quadratic};

use crate::error::{Error, Result};
use crate::measures::{same_space, Measure, ProbabilityMeasure, RandomVariable};
use crate::quadrature;

/// `D_KL[y, z] = sum_i [ y_i ln(y_i / z_i) - y_i + z_i ]`.
///
/// Conventions: a zero `y`-coordinate contributes `z_i` (`0 ln 0 = 0`); a
/// positive `y`-coordinate over a zero `z`-coordinate makes the divergence
/// infinite. The result is always `>= 0`.
pub fn kl_divergence(y: &Measure, z: &Measure) -> Result<f64> {
    if !same_space(y.space(), z.space()) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(kl_divergence_weights(y.weights(), z.weights()))
}

/// Branch-explicit KL sum on raw weight slices.
pub(crate) fn kl_divergence_weights(y: &[f64], z: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&yi, &zi) in y.iter().zip(z) {
        if yi == 0.0 {
            acc += zi;
        } else if zi == 0.0 {
            return f64::INFINITY;
        } else {
            acc += yi * (yi / zi).ln() - yi + zi;
        }
    }
    acc.max(0.0)
}

/// Dual divergence `D*_KL[x, 0] = <e^x - 1 - x, z> = <phi*(x), z>`.
///
/// Nonnegative because `phi* >= 0`; overflow surfaces as `+inf`.
pub fn dual_kl_divergence(x: &RandomVariable, z: &Measure) -> Result<f64> {
    if !same_space(x.space(), z.space()) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(x.values()
        .iter()
        .zip(z.weights())
        .map(|(&xi, &zi)| if zi == 0.0 { 0.0 } else { zi * PhiStar::value(xi) })
        .sum())
}

/// Generalized Bregman distance
/// `D_F[y, z] = inf { F(y) - F(z) - <x, y-z> : x in dF(z) }`
/// for separable `F(y) = sum_i f(y_i)`.
///
/// The infimum is resolved coordinate-wise by the endpoint rule: the right
/// derivative when moving up, the left one when moving down. Returns `+inf`
/// when `F(y) = inf` or the subdifferential at `z` is empty.
pub fn bregman_divergence<F>(f: &F, y: &Measure, z: &Measure) -> Result<f64>
where
    F: ConvexIntegrand + ?Sized,
{
    if !same_space(y.space(), z.space()) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(bregman_divergence_vec(f, y.weights(), z.weights()))
}

/// [`bregman_divergence`] on raw coordinate slices.
///
/// The generalized distance is defined on the whole space, not just the
/// positive cone, so signed arguments are allowed here (`f(t) = |t|` at
/// `y = (1, -1)` is the canonical example).
pub fn bregman_divergence_vec<F>(f: &F, y: &[f64], z: &[f64]) -> f64
where
    F: ConvexIntegrand + ?Sized,
{
    let mut acc = 0.0;
    for (&yi, &zi) in y.iter().zip(z) {
        let fy = f.eval(yi);
        if fy == f64::INFINITY {
            return f64::INFINITY;
        }
        let Some((lo, hi)) = f.subgradient(zi) else {
            return f64::INFINITY;
        };
        let diff = yi - zi;
        let x = if diff > 0.0 { hi } else { lo };
        if diff != 0.0 {
            debug_assert!(x.is_finite(), "one-sided derivative must be finite here");
            acc += fy - f.eval(zi) - x * diff;
        }
    }
    acc.max(0.0)
}

/// Gradient of the KL functional: `(ln y_i)_i`, the first differential of
/// `D_KL[., z]` up to the constant `-ln z`.
pub fn kl_gradient(y: &Measure) -> Result<RandomVariable> {
    let values = y
        .weights()
        .iter()
        .map(|&w| {
            if w > 0.0 {
                Ok(w.ln())
            } else {
                Err(Error::Domain("kl_gradient needs strictly positive weights".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    RandomVariable::new(y.space().clone(), values)
}

/// Diagonal of the KL Hessian: `(1 / y_i)_i`, the Fisher metric weights.
pub fn kl_hessian_diag(y: &Measure) -> Result<Vec<f64>> {
    y.weights()
        .iter()
        .map(|&w| {
            if w > 0.0 {
                Ok(1.0 / w)
            } else {
                Err(Error::Domain("kl_hessian_diag needs strictly positive weights".into()))
            }
        })
        .collect()
}

/// Residual of the generalized law of cosines,
/// `D[y,w] - D[y,z] - D[z,w] + <grad F(z) - grad F(w), z - y>`;
/// identically zero for differentiable `F`.
pub fn cosine_law_residual<F>(f: &F, y: &Measure, z: &Measure, w: &Measure) -> Result<f64>
where
    F: ConvexIntegrand + ?Sized,
{
    let d_yw = bregman_divergence(f, y, w)?;
    let d_yz = bregman_divergence(f, y, z)?;
    let d_zw = bregman_divergence(f, z, w)?;
    let mut grad_term = 0.0;
    for ((&zi, &wi), &yi) in z.weights().iter().zip(w.weights()).zip(y.weights()) {
        grad_term += (f.deriv(zi) - f.deriv(wi)) * (zi - yi);
    }
    let residual = d_yw - d_yz - d_zw + grad_term;
    if !residual.is_finite() {
        return Err(Error::NotFinite("law-of-cosines term".into()));
    }
    Ok(residual)
}

/// Integral form of the divergence from the first-order Taylor remainder:
/// `int_0^1 (1-t) <Hess F(z + t(y-z)) (y-z), y-z> dt`.
///
/// Evaluated by adaptive Gauss-Legendre quadrature; must match
/// [`bregman_divergence`] within the quadrature tolerance.
pub fn taylor_remainder_integral<F>(f: &F, y: &Measure, z: &Measure, quad_tol: f64) -> Result<f64>
where
    F: ConvexIntegrand + ?Sized,
{
    if !same_space(y.space(), z.space()) {
        return Err(Error::MismatchedSpaces);
    }
    let (dom_lo, dom_hi) = f.domain();
    for (&yi, &zi) in y.weights().iter().zip(z.weights()) {
        let lo = yi.min(zi);
        let hi = yi.max(zi);
        if !(lo > dom_lo && hi < dom_hi) {
            return Err(Error::Domain(
                "segment [z, y] must stay in the domain interior".into(),
            ));
        }
    }
    let u: Vec<f64> = y
        .weights()
        .iter()
        .zip(z.weights())
        .map(|(a, b)| a - b)
        .collect();
    let zs = z.weights();
    let integrand = |t: f64| -> f64 {
        let quad: f64 = u
            .iter()
            .zip(zs)
            .map(|(&ui, &zi)| ui * ui * f.second_deriv(zi + t * ui))
            .sum();
        (1.0 - t) * quad
    };
    Ok(quadrature::adaptive(&integrand, 0.0, 1.0, quad_tol))
}

/// Whether `D_F[y, z] = 0`, decided through the subdifferential criterion:
/// zero distance iff the subgradient intervals at `y` and `z` intersect in
/// every coordinate.
pub fn zero_distance_check<F>(f: &F, y: &Measure, z: &Measure) -> Result<bool>
where
    F: ConvexIntegrand + ?Sized,
{
    if !same_space(y.space(), z.space()) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(zero_distance_check_vec(f, y.weights(), z.weights()))
}

/// [`zero_distance_check`] on raw coordinate slices.
pub fn zero_distance_check_vec<F>(f: &F, y: &[f64], z: &[f64]) -> bool
where
    F: ConvexIntegrand + ?Sized,
{
    y.iter().zip(z).all(|(&yi, &zi)| {
        match (f.subgradient(yi), f.subgradient(zi)) {
            (Some((ylo, yhi)), Some((zlo, zhi))) => ylo.max(zlo) <= yhi.min(zhi) + 1e-12,
            _ => false,
        }
    })
}

/// Cumulant generating function `Psi_q(beta x) = ln E_q{ e^{beta x} }`,
/// computed with a max-shift so large exponents cannot overflow the sum.
pub fn cumulant_generating(x: &RandomVariable, q: &ProbabilityMeasure, beta: f64) -> Result<f64> {
    if !same_space(x.space(), q.space()) {
        return Err(Error::MismatchedSpaces);
    }
    let mut shift = f64::NEG_INFINITY;
    for (&xi, &qi) in x.values().iter().zip(q.weights()) {
        if qi > 0.0 {
            shift = shift.max(beta * xi);
        }
    }
    if shift == f64::INFINITY {
        return Ok(f64::INFINITY);
    }
    let sum: f64 = x
        .values()
        .iter()
        .zip(q.weights())
        .filter(|(_, &qi)| qi > 0.0)
        .map(|(&xi, &qi)| qi * (beta * xi - shift).exp())
        .sum();
    Ok(shift + sum.ln())
}

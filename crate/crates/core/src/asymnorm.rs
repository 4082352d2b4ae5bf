//! Asymmetric seminorms and quasimetrics induced by KL sublevel sets,
//! Luxemburg norms of the four symmetrized variants, and finite-dimensional
//! separation reports.
//!
//! All sublevel sets are normalized at level 1. Every norm here is positively
//! homogeneous and subadditive but generally *not* symmetric: the unit ball
//! `{x : D*_KL[x, 0] <= 1}` is not balanced, and reflections `x -> -x` can
//! change the norm by a factor of two (the fixed witness `x = (1, 0)` at
//! `z = (0.5, 0.5)` measures about 0.664 forward and 0.339 reflected).

use serde::{Deserialize, Serialize};

use crate::bregman::{Phi, PhiStar};
use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::measures::{same_space, Measure, RandomVariable};
use crate::par;
use crate::rootfind;
use crate::sampling;

/// A reference measure (the sublevel-set center) plus solver settings.
#[derive(Debug, Clone)]
pub struct NormContext {
    base: Measure,
    cfg: SolverConfig,
}

impl NormContext {
    pub fn new(base: Measure, cfg: SolverConfig) -> Result<Self> {
        if base.weights().iter().all(|&w| w == 0.0) {
            return Err(Error::ZeroMass);
        }
        cfg.validate()?;
        Ok(Self { base, cfg })
    }

    pub fn base(&self) -> &Measure {
        &self.base
    }

    pub fn cfg(&self) -> &SolverConfig {
        &self.cfg
    }
}

/// The four symmetrized Young functions of the Orlicz construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LuxemburgVariant {
    /// `phi(|u|)` — the separable, smaller symmetrization on the primal side.
    PhiAbs,
    /// `phi(-|u|)` — the larger symmetrization; finite only on `|u| <= 1`.
    PhiNegAbs,
    /// `phi*(|x|)` — the larger symmetrization on the dual side.
    PhiStarAbs,
    /// `phi*(-|x|)` — the smaller, separable dual symmetrization.
    PhiStarNegAbs,
}

impl LuxemburgVariant {
    pub fn apply(self, t: f64) -> f64 {
        match self {
            LuxemburgVariant::PhiAbs => Phi::value(t.abs()),
            LuxemburgVariant::PhiNegAbs => Phi::value(-t.abs()),
            LuxemburgVariant::PhiStarAbs => PhiStar::value(t.abs()),
            LuxemburgVariant::PhiStarNegAbs => PhiStar::value(-t.abs()),
        }
    }

    pub const ALL: [LuxemburgVariant; 4] = [
        LuxemburgVariant::PhiAbs,
        LuxemburgVariant::PhiNegAbs,
        LuxemburgVariant::PhiStarAbs,
        LuxemburgVariant::PhiStarNegAbs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LuxemburgVariant::PhiAbs => "phi_abs",
            LuxemburgVariant::PhiNegAbs => "phi_neg_abs",
            LuxemburgVariant::PhiStarAbs => "phistar_abs",
            LuxemburgVariant::PhiStarNegAbs => "phistar_neg_abs",
        }
    }
}

impl std::str::FromStr for LuxemburgVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi_abs" => Ok(LuxemburgVariant::PhiAbs),
            "phi_neg_abs" => Ok(LuxemburgVariant::PhiNegAbs),
            "phistar_abs" => Ok(LuxemburgVariant::PhiStarAbs),
            "phistar_neg_abs" => Ok(LuxemburgVariant::PhiStarNegAbs),
            other => Err(Error::Parse(format!("unknown Luxemburg variant `{other}`"))),
        }
    }
}

/// Norm selector shared by the CLI and the boundary sampler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// `sup { <x, y-z> : D_KL[y, z] <= 1 }` on random variables.
    Support,
    /// `inf { a > 0 : D*_KL[x/a, 0] <= 1 }` on random variables.
    Gauge,
    /// `inf { 1/a : D_KL[z + a u, z] <= 1 }` on measure differences.
    Primal,
    /// `max(Gauge(x), Gauge(-x))` — the balanced `-N n N` norm.
    Symmetrized,
    Luxemburg(LuxemburgVariant),
}

impl NormKind {
    pub fn name(self) -> String {
        match self {
            NormKind::Support => "support".into(),
            NormKind::Gauge => "gauge".into(),
            NormKind::Primal => "primal".into(),
            NormKind::Symmetrized => "symmetrized".into(),
            NormKind::Luxemburg(v) => format!("luxemburg:{}", v.name()),
        }
    }
}

impl std::str::FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "support" => Ok(NormKind::Support),
            "gauge" => Ok(NormKind::Gauge),
            "primal" => Ok(NormKind::Primal),
            "symmetrized" => Ok(NormKind::Symmetrized),
            other => match other.strip_prefix("luxemburg:") {
                Some(v) => Ok(NormKind::Luxemburg(v.parse()?)),
                None => Err(Error::Parse(format!("unknown norm kind `{other}`"))),
            },
        }
    }
}

/// True when `x` varies only on outcomes the base measure does not charge.
/// Such an `x` is invisible to every norm here (the seminorm degeneracy the
/// separation theorems witness), so the norms return 0 for it.
pub fn is_null_supported(x: &RandomVariable, z: &Measure) -> bool {
    let mut any_nonzero = false;
    for (&xi, &zi) in x.values().iter().zip(z.weights()) {
        if xi != 0.0 {
            if zi > 0.0 {
                return false;
            }
            any_nonzero = true;
        }
    }
    any_nonzero
}

/// Support-function norm `||x|_KL* = sup { <x, y-z> : D_KL[y, z] <= 1 }`.
///
/// The supremum is taken along the exponential path `y(b) = e^{b x} z`:
/// `g(b) = D_KL[y(b), z]` grows monotonically, and the optimizer sits at
/// `g(b*) = 1`. When `x <= 0` on the support of `z` and the whole tilt path
/// stays inside the ball (`lim g <= 1`), the supremum is instead attained on
/// the boundary of the positive cone and equals `sum |x_i| z_i` over the
/// negative coordinates; that exact limit is returned rather than a
/// bracketing error.
pub fn support_norm_dual(x: &RandomVariable, ctx: &NormContext) -> Result<f64> {
    if !same_space(x.space(), ctx.base.space()) {
        return Err(Error::MismatchedSpaces);
    }
    let z = ctx.base.weights();
    let xs = x.values();

    let active: Vec<(f64, f64)> = xs
        .iter()
        .zip(z)
        .filter(|(&xi, &zi)| zi > 0.0 && xi != 0.0)
        .map(|(&xi, &zi)| (xi, zi))
        .collect();
    if active.is_empty() {
        return Ok(0.0);
    }

    // g(b) = sum z_i [ (1+u) t - u ]  with  t = b x_i,  u = e^t - 1
    let g = |b: f64| -> f64 {
        active
            .iter()
            .map(|&(xi, zi)| {
                let t = b * xi;
                let u = t.exp_m1();
                zi * ((1.0 + u) * t - u)
            })
            .sum()
    };
    let value_at = |b: f64| -> f64 {
        active
            .iter()
            .map(|&(xi, zi)| xi * (b * xi).exp_m1() * zi)
            .sum()
    };

    let has_positive = active.iter().any(|&(xi, _)| xi > 0.0);
    if !has_positive {
        // g saturates at the mass of the strictly negative part
        let saturation: f64 = active.iter().map(|&(_, zi)| zi).sum();
        if saturation <= 1.0 {
            return Ok(active.iter().map(|&(xi, zi)| -xi * zi).sum());
        }
    }
    let beta = rootfind::solve_increasing(g, 1.0, 0.0, 1.0, &ctx.cfg, "tilt level g(beta)")?;
    Ok(value_at(beta))
}

/// Gauge norm `||x|_F* = inf { a > 0 : <phi*(x/a), z> <= 1 }`.
pub fn gauge_norm_dual(x: &RandomVariable, ctx: &NormContext) -> Result<f64> {
    if !same_space(x.space(), ctx.base.space()) {
        return Err(Error::MismatchedSpaces);
    }
    gauge_dual_values(x.values(), ctx)
}

fn gauge_dual_values(xs: &[f64], ctx: &NormContext) -> Result<f64> {
    let z = ctx.base.weights();
    let active: Vec<(f64, f64)> = xs
        .iter()
        .zip(z)
        .filter(|(&xi, &zi)| zi > 0.0 && xi != 0.0)
        .map(|(&xi, &zi)| (xi, zi))
        .collect();
    if active.is_empty() {
        return Ok(0.0);
    }
    let h = |alpha: f64| -> f64 {
        active
            .iter()
            .map(|&(xi, zi)| zi * PhiStar::value(xi / alpha))
            .sum()
    };
    rootfind::solve_decreasing(h, 1.0, 0.5, 1.0, &ctx.cfg, "dual gauge h(alpha)")
}

/// Primal gauge norm of a measure: `|| y - z |_KL`.
///
/// Errors if `y` has negative weights; the difference `u = y - z` is handed
/// to [`gauge_primal_diff`].
pub fn gauge_norm_primal(y: &Measure, ctx: &NormContext) -> Result<f64> {
    if !same_space(y.space(), ctx.base.space()) {
        return Err(Error::MismatchedSpaces);
    }
    let u: Vec<f64> = y
        .weights()
        .iter()
        .zip(ctx.base.weights())
        .map(|(a, b)| a - b)
        .collect();
    gauge_primal_diff(&u, ctx)
}

/// Gauge of the sublevel set `{u : D_KL[z + u, z] <= 1}` over the positive
/// cone, evaluated at a signed difference vector `u`.
///
/// `G(a) = D_KL[z + a u, z]` increases on `[0, a_dom]` where
/// `a_dom = sup { a : z + a u >= 0 }`. If `G` reaches 1 inside the cone the
/// norm is `1/a*`; if the sublevel set is cut by the cone boundary first
/// (`G(a_dom) < 1`) the norm is `1/a_dom`; directions leaving the cone
/// immediately (or charging a `z`-null coordinate) have infinite norm.
pub fn gauge_primal_diff(u: &[f64], ctx: &NormContext) -> Result<f64> {
    let z = ctx.base.weights();
    if u.len() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: z.len(),
            got: u.len(),
        });
    }
    if u.iter().all(|&v| v == 0.0) {
        return Ok(0.0);
    }
    if u.iter().zip(z).any(|(&ui, &zi)| zi == 0.0 && ui != 0.0) {
        return Ok(f64::INFINITY);
    }
    let active: Vec<(f64, f64)> = u
        .iter()
        .zip(z)
        .filter(|(&ui, &zi)| zi > 0.0 && ui != 0.0)
        .map(|(&ui, &zi)| (ui, zi))
        .collect();
    if active.is_empty() {
        return Ok(0.0);
    }

    // 1/a_dom, the inverse of the largest scale keeping z + a u >= 0
    let inv_dom: f64 = active
        .iter()
        .filter(|&&(ui, _)| ui < 0.0)
        .map(|&(ui, zi)| -ui / zi)
        .fold(0.0_f64, f64::max);

    let g = |a: f64| -> f64 {
        active
            .iter()
            .map(|&(ui, zi)| {
                let mut r = a * ui / zi;
                if r < -1.0 && r > -1.0 - 1e-12 {
                    r = -1.0;
                }
                zi * Phi::value(r)
            })
            .sum()
    };

    if inv_dom > 0.0 {
        let a_dom = 1.0 / inv_dom;
        if g(a_dom) <= 1.0 {
            return Ok(inv_dom);
        }
        let a = rootfind::solve_increasing(g, 1.0, 0.0, a_dom, &ctx.cfg, "primal gauge G(alpha)")?;
        Ok(1.0 / a)
    } else {
        let a = rootfind::solve_increasing(g, 1.0, 0.0, 1.0, &ctx.cfg, "primal gauge G(alpha)")?;
        Ok(1.0 / a)
    }
}

/// `rho_F*(w, x) = || x - w |_F*` on random variables.
pub fn quasimetric_dual(w: &RandomVariable, x: &RandomVariable, ctx: &NormContext) -> Result<f64> {
    gauge_norm_dual(&x.try_sub(w)?, ctx)
}

/// `rho_KL(y1, y2) = || y2 - y1 |_KL` on measures.
pub fn quasimetric_primal(y1: &Measure, y2: &Measure, ctx: &NormContext) -> Result<f64> {
    if !same_space(y1.space(), y2.space()) || !same_space(y1.space(), ctx.base.space()) {
        return Err(Error::MismatchedSpaces);
    }
    let u: Vec<f64> = y2
        .weights()
        .iter()
        .zip(y1.weights())
        .map(|(a, b)| a - b)
        .collect();
    gauge_primal_diff(&u, ctx)
}

/// Luxemburg norm `inf { a > 0 : sum_i z_i Phi(v_i / a) <= 1 }` for the
/// chosen symmetrized Young function.
pub fn luxemburg_norm(v: &[f64], ctx: &NormContext, variant: LuxemburgVariant) -> Result<f64> {
    let z = ctx.base.weights();
    if v.len() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: z.len(),
            got: v.len(),
        });
    }
    let active: Vec<(f64, f64)> = v
        .iter()
        .zip(z)
        .filter(|(&vi, &zi)| zi > 0.0 && vi != 0.0)
        .map(|(&vi, &zi)| (vi, zi))
        .collect();
    if active.is_empty() {
        return Ok(0.0);
    }
    let h = |alpha: f64| -> f64 {
        active
            .iter()
            .map(|&(vi, zi)| zi * variant.apply(vi / alpha))
            .sum()
    };
    rootfind::solve_decreasing(h, 1.0, 0.5, 1.0, &ctx.cfg, "luxemburg level")
}

/// Uniform entry point used by the boundary sampler and the CLI.
///
/// `Support`, `Gauge` and `Symmetrized` read `v` as random-variable values;
/// `Primal` reads it as a measure difference `u = y - z`.
pub fn norm_by_kind(kind: NormKind, v: &[f64], ctx: &NormContext) -> Result<f64> {
    match kind {
        NormKind::Support => {
            let x = RandomVariable::new(ctx.base.space().clone(), v.to_vec())?;
            support_norm_dual(&x, ctx)
        }
        NormKind::Gauge => gauge_dual_values(v, ctx),
        NormKind::Primal => gauge_primal_diff(v, ctx),
        NormKind::Symmetrized => {
            let neg: Vec<f64> = v.iter().map(|a| -a).collect();
            Ok(gauge_dual_values(v, ctx)?.max(gauge_dual_values(&neg, ctx)?))
        }
        NormKind::Luxemburg(variant) => luxemburg_norm(v, ctx, variant),
    }
}

// ---------------------------------------------------------------------------
// Separation report
// ---------------------------------------------------------------------------

/// Outcome of probing the T0/T1/T2 separation criteria.
#[derive(Debug, Clone, Serialize)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    /// Smallest forward norm over the probes.
    pub min_forward: f64,
    /// Smallest reflected norm over the probes.
    pub min_backward: f64,
    /// Smallest `max(||d|, ||-d|)` over the probes.
    pub min_symmetrized: f64,
    /// Smallest balanced-hull norm over the probes (the T2 criterion).
    pub min_balanced: f64,
    /// How the T2 probe was computed.
    pub t2_method: String,
    /// Labels of base-measure outcomes with zero weight (T1 failures).
    pub null_labels: Vec<String>,
    /// A probe direction with vanishing symmetrized norm, when one exists.
    pub t0_witness: Option<Vec<f64>>,
    /// Gauge positivity of every probe: the dual unit ball is bounded.
    pub dual_ball_bounded: bool,
}

/// Gauge of the balanced hull `co[-N u N]` of the dual unit ball: the
/// infimal convolution `inf_w { ||x - w| + ||-w| }`, approximated by compass
/// descent (the summands are smooth convex gauges away from zero, so the
/// pattern descent converges).
fn balanced_hull_norm(xs: &[f64], ctx: &NormContext) -> Result<f64> {
    let n = xs.len();
    let psi = |w: &[f64]| -> Result<f64> {
        let a: Vec<f64> = xs.iter().zip(w).map(|(x, wi)| x - wi).collect();
        let neg_w: Vec<f64> = w.iter().map(|v| -v).collect();
        Ok(gauge_dual_values(&a, ctx)? + gauge_dual_values(&neg_w, ctx)?)
    };
    let scale = xs.iter().fold(0.0_f64, |acc, v| acc.max(v.abs())) + 1.0;
    let mut best = f64::INFINITY;
    for seed_scale in [0.0, 0.5, 1.0] {
        let mut cur: Vec<f64> = xs.iter().map(|v| seed_scale * v).collect();
        let mut cur_val = psi(&cur)?;
        let mut step = scale / 4.0;
        while step > ctx.cfg.inf_conv_tol * 1e-2 {
            let mut improved = false;
            for i in 0..n {
                for sign in [1.0, -1.0] {
                    let mut cand = cur.clone();
                    cand[i] += sign * step;
                    let v = psi(&cand)?;
                    if v < cur_val - 1e-15 {
                        cur = cand;
                        cur_val = v;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best = best.min(cur_val);
    }
    Ok(best)
}

/// Probes `+-`basis directions plus `extra_directions` random unit vectors
/// and grades the topology: T0 needs `max(||d|, ||-d|) > 0` everywhere, T1
/// needs `||d| > 0` everywhere, T2 needs the balanced-hull norm positive.
pub fn separation_report(ctx: &NormContext, extra_directions: usize) -> Result<SeparationReport> {
    let n = ctx.base.len();
    let mut probes: Vec<Vec<f64>> = Vec::new();
    for i in 0..n {
        for sign in [1.0, -1.0] {
            let mut d = vec![0.0; n];
            d[i] = sign;
            probes.push(d);
        }
    }
    let mut rng = sampling::trial_rng(ctx.cfg.rng_seed, 0x5e9a, 0);
    for _ in 0..extra_directions {
        probes.push(sampling::unit_direction(&mut rng, n));
    }

    let positivity = 1e-9;
    let mut report = SeparationReport {
        t0: true,
        t1: true,
        t2: true,
        min_forward: f64::INFINITY,
        min_backward: f64::INFINITY,
        min_symmetrized: f64::INFINITY,
        min_balanced: f64::INFINITY,
        t2_method: if n <= 3 {
            "balanced-hull".into()
        } else {
            "symmetrized".into()
        },
        null_labels: ctx
            .base
            .space()
            .labels()
            .iter()
            .zip(ctx.base.weights())
            .filter(|(_, &w)| w == 0.0)
            .map(|(l, _)| l.clone())
            .collect(),
        t0_witness: None,
        dual_ball_bounded: true,
    };

    for d in &probes {
        let fwd = gauge_dual_values(d, ctx)?;
        let neg: Vec<f64> = d.iter().map(|v| -v).collect();
        let bwd = gauge_dual_values(&neg, ctx)?;
        let sym = fwd.max(bwd);
        let bal = if n <= 3 { balanced_hull_norm(d, ctx)? } else { sym };
        report.min_forward = report.min_forward.min(fwd);
        report.min_backward = report.min_backward.min(bwd);
        report.min_symmetrized = report.min_symmetrized.min(sym);
        report.min_balanced = report.min_balanced.min(bal);
        if sym <= positivity && report.t0_witness.is_none() {
            report.t0_witness = Some(d.clone());
        }
        report.t0 &= sym > positivity;
        report.t1 &= fwd > positivity && bwd > positivity;
        report.t2 &= bal > positivity;
        report.dual_ball_bounded &= fwd > positivity;
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Unit-ball boundary sampling
// ---------------------------------------------------------------------------

/// One emitted boundary point: direction angle and coordinates at norm 1.
#[derive(Debug, Clone, Serialize)]
pub struct BallPoint {
    pub angle: f64,
    pub coords: Vec<f64>,
}

/// Boundary sample of a unit ball on a 2- or 3-outcome space.
#[derive(Debug, Clone, Serialize)]
pub struct BallBoundary {
    pub kind: String,
    pub base_weights: Vec<f64>,
    pub abs_tol: f64,
    pub points: Vec<BallPoint>,
    /// Angles of directions skipped because the norm vanished or blew up.
    pub omitted: Vec<f64>,
}

/// Emits `count` boundary points `d / ||d|` for deterministic directions on
/// the unit circle (2 outcomes, ordered by angle) or a Fibonacci sphere
/// (3 outcomes, ordered by index). Directions with zero or infinite norm are
/// omitted and flagged.
pub fn ball_boundary_sample(ctx: &NormContext, kind: NormKind, count: usize) -> Result<BallBoundary> {
    let n = ctx.base.len();
    if n != 2 && n != 3 {
        return Err(Error::Domain(format!(
            "ball boundary sampling needs a 2- or 3-outcome space, got {n}"
        )));
    }
    if count < 8 {
        return Err(Error::Domain("count must be at least 8".into()));
    }

    let direction = |k: usize| -> (f64, Vec<f64>) {
        if n == 2 {
            let angle = std::f64::consts::TAU * k as f64 / count as f64;
            (angle, vec![angle.cos(), angle.sin()])
        } else {
            // Fibonacci sphere, indexed pole to pole
            let golden_angle = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
            let zc = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
            let r = (1.0 - zc * zc).sqrt();
            let azimuth = (golden_angle * k as f64).rem_euclid(std::f64::consts::TAU);
            (azimuth, vec![r * azimuth.cos(), r * azimuth.sin(), zc])
        }
    };

    let solved = par::batch_map(count, |k| {
        let (angle, d) = direction(k);
        let norm = norm_by_kind(kind, &d, ctx);
        (angle, d, norm)
    });

    let mut points = Vec::new();
    let mut omitted = Vec::new();
    for (angle, d, norm) in solved {
        let norm = norm?;
        if norm <= 1e-12 || !norm.is_finite() {
            omitted.push(angle);
            continue;
        }
        points.push(BallPoint {
            angle,
            coords: d.iter().map(|v| v / norm).collect(),
        });
    }
    Ok(BallBoundary {
        kind: kind.name(),
        base_weights: ctx.base.weights().to_vec(),
        abs_tol: ctx.cfg.abs_tol,
        points,
        omitted,
    })
}

/// CSV rendering of a boundary sample: `#`-prefixed header comments, then
/// `angle,px,py[,pz]` rows with 12 significant digits.
pub fn render_ball_csv(ball: &BallBoundary) -> String {
    use crate::fmt::sig12;
    let mut out = String::new();
    out.push_str(&format!(
        "# unit ball boundary: kind={} z=[{}] abs_tol={}\n",
        ball.kind,
        ball.base_weights
            .iter()
            .map(|w| sig12(*w))
            .collect::<Vec<_>>()
            .join(" "),
        sig12(ball.abs_tol),
    ));
    if !ball.omitted.is_empty() {
        out.push_str(&format!(
            "# omitted {} degenerate directions at angles: {}\n",
            ball.omitted.len(),
            ball.omitted
                .iter()
                .map(|a| sig12(*a))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    let dim = ball
        .points
        .first()
        .map_or(ball.base_weights.len(), |p| p.coords.len());
    out.push_str(if dim == 2 { "angle,px,py\n" } else { "angle,px,py,pz\n" });
    for p in &ball.points {
        out.push_str(&sig12(p.angle));
        for c in &p.coords {
            out.push(',');
            out.push_str(&sig12(*c));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::SampleSpace;
    use approx::assert_abs_diff_eq;
    use rand::Rng;

    fn ctx2() -> NormContext {
        let s = SampleSpace::indexed(2);
        NormContext::new(
            Measure::new(s, vec![0.5, 0.5]).unwrap(),
            SolverConfig::default(),
        )
        .unwrap()
    }

    fn rv(values: &[f64]) -> RandomVariable {
        RandomVariable::new(SampleSpace::indexed(values.len()), values.to_vec()).unwrap()
    }

    #[test]
    fn support_norm_zero_and_constant() {
        let ctx = ctx2();
        assert_eq!(support_norm_dual(&rv(&[0.0, 0.0]), &ctx).unwrap(), 0.0);
        // constant 1 on a probability base: the root is beta = 1 in closed
        // form and the norm is e - 1
        assert_abs_diff_eq!(
            support_norm_dual(&rv(&[1.0, 1.0]), &ctx).unwrap(),
            1.718281828459045,
            epsilon = 1e-9
        );
    }

    #[test]
    fn support_norm_odd_witness() {
        // beta* solves beta sinh(beta) = cosh(beta); the norm is sinh(beta*).
        // Frozen from the scalar oracle: beta* = 1.19967864025773,
        // sinh(beta*) = 1.50887956153832.
        let ctx = ctx2();
        assert_abs_diff_eq!(
            support_norm_dual(&rv(&[1.0, -1.0]), &ctx).unwrap(),
            1.50887956153832,
            epsilon = 1e-9
        );
    }

    #[test]
    fn support_norm_cone_capped_case() {
        // x <= 0 everywhere: the tilt path saturates below level 1 and the
        // supremum sits on the cone boundary at sum |x_i| z_i.
        let ctx = ctx2();
        assert_abs_diff_eq!(
            support_norm_dual(&rv(&[-1.0, 0.0]), &ctx).unwrap(),
            0.5,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            support_norm_dual(&rv(&[-1.0, -1.0]), &ctx).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn gauge_norm_asymmetry_witness() {
        // || (1,0) | = 1/t with e^t - t = 3   => 0.664345224865896
        // || (-1,0) | = 1/t with e^-t + t = 3 => 0.339267011293244
        let ctx = ctx2();
        let fwd = gauge_norm_dual(&rv(&[1.0, 0.0]), &ctx).unwrap();
        let bwd = gauge_norm_dual(&rv(&[-1.0, 0.0]), &ctx).unwrap();
        assert_abs_diff_eq!(fwd, 0.664345224865896, epsilon = 1e-9);
        assert_abs_diff_eq!(bwd, 0.339267011293244, epsilon = 1e-9);
        assert!(fwd - bwd >= 0.3);
        assert_eq!(gauge_norm_dual(&rv(&[0.0, 0.0]), &ctx).unwrap(), 0.0);
    }

    #[test]
    fn primal_gauge_examples() {
        let ctx = ctx2();
        let z = ctx.base().clone();
        assert_eq!(gauge_norm_primal(&z, &ctx).unwrap(), 0.0);
        // y = (1, 0): G(a_dom = 1) = ln 2 < 1, so the norm is the domain cap
        let y = Measure::new(z.space().clone(), vec![1.0, 0.0]).unwrap();
        assert_abs_diff_eq!(gauge_norm_primal(&y, &ctx).unwrap(), 1.0, epsilon = 1e-12);
        // y = 2z: u = z, G(a) = (1+a) ln(1+a) - a, root a* = e - 1 in closed
        // form, norm 1/(e-1) = 0.581976706869326
        let y = Measure::new(z.space().clone(), vec![1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(
            gauge_norm_primal(&y, &ctx).unwrap(),
            0.581976706869326,
            epsilon = 1e-9
        );
    }

    #[test]
    fn primal_gauge_infinite_off_cone() {
        let s = SampleSpace::indexed(2);
        let ctx = NormContext::new(
            Measure::new(s, vec![1.0, 0.0]).unwrap(),
            SolverConfig::default(),
        )
        .unwrap();
        // charging the null outcome leaves the cone immediately
        assert!(gauge_primal_diff(&[0.0, 1.0], &ctx).unwrap().is_infinite());
        assert!(gauge_primal_diff(&[0.0, -1.0], &ctx).unwrap().is_infinite());
    }

    #[test]
    fn quasimetric_axioms_and_asymmetry() {
        let ctx = ctx2();
        let x = rv(&[0.7, -0.2]);
        assert_eq!(quasimetric_dual(&x, &x, &ctx).unwrap(), 0.0);
        let zero = rv(&[0.0, 0.0]);
        let w = rv(&[1.0, 0.0]);
        let fwd = quasimetric_dual(&zero, &w, &ctx).unwrap();
        let bwd = quasimetric_dual(&w, &zero, &ctx).unwrap();
        assert_abs_diff_eq!(fwd, 0.664345224865896, epsilon = 1e-9);
        assert_abs_diff_eq!(bwd, 0.339267011293244, epsilon = 1e-9);
    }

    #[test]
    fn quasimetric_triangle_inequality() {
        let ctx = ctx2();
        let mut rng = sampling::trial_rng(1, 2, 3);
        for _ in 0..200 {
            let a = rv(&sampling::coords(&mut rng, 2, -2.0, 2.0));
            let b = rv(&sampling::coords(&mut rng, 2, -2.0, 2.0));
            let c = rv(&sampling::coords(&mut rng, 2, -2.0, 2.0));
            let ac = quasimetric_dual(&a, &c, &ctx).unwrap();
            let ab = quasimetric_dual(&a, &b, &ctx).unwrap();
            let bc = quasimetric_dual(&b, &c, &ctx).unwrap();
            assert!(ac <= ab + bc + 1e-9, "{ac} > {ab} + {bc}");
        }
    }

    #[test]
    fn luxemburg_zero_and_symmetry() {
        let ctx = ctx2();
        for variant in LuxemburgVariant::ALL {
            assert_eq!(luxemburg_norm(&[0.0, 0.0], &ctx, variant).unwrap(), 0.0);
            let v = [0.8, -0.3];
            let neg = [-0.8, 0.3];
            assert_abs_diff_eq!(
                luxemburg_norm(&v, &ctx, variant).unwrap(),
                luxemburg_norm(&neg, &ctx, variant).unwrap(),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn luxemburg_ordering_chains() {
        let ctx = ctx2();
        let mut rng = sampling::trial_rng(7, 8, 9);
        for _ in 0..100 {
            // primal chain: phi(|.|) <= asymmetric <= phi(-|.|)
            let u = [rng.random_range(-0.95..3.0), rng.random_range(-0.95..3.0)];
            let y = Measure::new(
                ctx.base().space().clone(),
                ctx.base()
                    .weights()
                    .iter()
                    .zip(&u)
                    .map(|(zi, ui)| zi * (1.0 + ui))
                    .collect(),
            )
            .unwrap();
            let lo = luxemburg_norm(&u, &ctx, LuxemburgVariant::PhiAbs).unwrap();
            let mid = gauge_norm_primal(&y, &ctx).unwrap();
            let hi = luxemburg_norm(&u, &ctx, LuxemburgVariant::PhiNegAbs).unwrap();
            assert!(lo <= mid + 1e-9, "{lo} > {mid}");
            assert!(mid <= hi + 1e-9, "{mid} > {hi}");

            // dual chain: phi*(|.|) >= asymmetric >= phi*(-|.|)
            let x = [rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)];
            let hi = luxemburg_norm(&x, &ctx, LuxemburgVariant::PhiStarAbs).unwrap();
            let mid = gauge_dual_values(&x, &ctx).unwrap();
            let lo = luxemburg_norm(&x, &ctx, LuxemburgVariant::PhiStarNegAbs).unwrap();
            assert!(hi >= mid - 1e-9, "{hi} < {mid}");
            assert!(mid >= lo - 1e-9, "{mid} < {lo}");
        }
    }

    #[test]
    fn norm_axioms_smoke() {
        let ctx = ctx2();
        let mut rng = sampling::trial_rng(4, 5, 6);
        let kinds = [
            NormKind::Support,
            NormKind::Gauge,
            NormKind::Primal,
            NormKind::Symmetrized,
            NormKind::Luxemburg(LuxemburgVariant::PhiStarAbs),
        ];
        for _ in 0..60 {
            let a = sampling::coords(&mut rng, 2, -1.5, 1.5);
            let b = sampling::coords(&mut rng, 2, -1.5, 1.5);
            let beta: f64 = rng.random_range(0.1..4.0);
            for kind in kinds {
                let na = norm_by_kind(kind, &a, &ctx).unwrap();
                let scaled: Vec<f64> = a.iter().map(|v| beta * v).collect();
                let ns = norm_by_kind(kind, &scaled, &ctx).unwrap();
                assert!(
                    (ns - beta * na).abs() <= 1e-10 * (1.0 + beta * na),
                    "{kind:?} homogeneity: {ns} vs {}",
                    beta * na
                );
                let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                let nb = norm_by_kind(kind, &b, &ctx).unwrap();
                let nsum = norm_by_kind(kind, &sum, &ctx).unwrap();
                assert!(nsum <= na + nb + 1e-9, "{kind:?} subadditivity");
            }
        }
    }

    #[test]
    fn separation_positive_base_passes() {
        let s = SampleSpace::indexed(3);
        let ctx = NormContext::new(
            Measure::new(s, vec![0.2, 0.5, 0.3]).unwrap(),
            SolverConfig::default(),
        )
        .unwrap();
        let report = separation_report(&ctx, 8).unwrap();
        assert!(report.t0 && report.t1 && report.t2);
        assert!(report.null_labels.is_empty());
        assert!(report.dual_ball_bounded);
        assert!(report.min_balanced > 1e-6);
    }

    #[test]
    fn separation_null_atom_fails_with_witness() {
        let s = SampleSpace::indexed(2);
        let ctx = NormContext::new(
            Measure::new(s, vec![1.0, 0.0]).unwrap(),
            SolverConfig::default(),
        )
        .unwrap();
        let report = separation_report(&ctx, 4).unwrap();
        assert!(!report.t0 && !report.t1 && !report.t2);
        assert_eq!(report.null_labels, vec!["1".to_string()]);
        let witness = report.t0_witness.expect("found a vanishing direction");
        // the witness is +-e_2: zero first coordinate
        assert_eq!(witness[0], 0.0);
        assert!(witness[1].abs() > 0.9);
        // e_1 is still positive both ways
        let fwd = gauge_dual_values(&[1.0, 0.0], &ctx).unwrap();
        let bwd = gauge_dual_values(&[-1.0, 0.0], &ctx).unwrap();
        assert!(fwd > 0.1 && bwd > 0.1);
    }

    #[test]
    fn ball_boundary_contract() {
        let ctx = ctx2();
        let count = 32;
        for kind in [
            NormKind::Gauge,
            NormKind::Symmetrized,
            NormKind::Luxemburg(LuxemburgVariant::PhiStarAbs),
        ] {
            let ball = ball_boundary_sample(&ctx, kind, count).unwrap();
            assert_eq!(ball.points.len() + ball.omitted.len(), count);
            for p in &ball.points {
                let norm = norm_by_kind(kind, &p.coords, &ctx).unwrap();
                assert!((norm - 1.0).abs() <= 1e-8, "{kind:?}: {norm}");
            }
        }
    }

    #[test]
    fn symmetric_ball_is_centrally_symmetric() {
        let ctx = ctx2();
        let ball = ball_boundary_sample(&ctx, NormKind::Symmetrized, 64).unwrap();
        for p in &ball.points {
            let found = ball.points.iter().any(|q| {
                p.coords
                    .iter()
                    .zip(&q.coords)
                    .all(|(a, b)| (a + b).abs() <= 1e-8)
            });
            assert!(found, "missing reflection of {:?}", p.coords);
        }
    }

    #[test]
    fn asymmetric_ball_radii_differ() {
        let ctx = ctx2();
        let ball = ball_boundary_sample(&ctx, NormKind::Gauge, 8).unwrap();
        // directions 0 and pi are +-e1; radii are 1/0.664 vs 1/0.339
        let right = ball.points.iter().find(|p| p.angle == 0.0).unwrap();
        let left = ball
            .points
            .iter()
            .find(|p| (p.angle - std::f64::consts::PI).abs() < 1e-12)
            .unwrap();
        assert_abs_diff_eq!(right.coords[0], 1.0 / 0.664345224865896, epsilon = 1e-6);
        assert_abs_diff_eq!(left.coords[0], -1.0 / 0.339267011293244, epsilon = 1e-6);
    }

    #[test]
    fn degenerate_direction_is_omitted_and_flagged() {
        let s = SampleSpace::indexed(2);
        let ctx = NormContext::new(
            Measure::new(s, vec![1.0, 0.0]).unwrap(),
            SolverConfig::default(),
        )
        .unwrap();
        let ball = ball_boundary_sample(&ctx, NormKind::Gauge, 8).unwrap();
        assert!(!ball.omitted.is_empty());
        assert_eq!(ball.points.len() + ball.omitted.len(), 8);
    }

    #[test]
    fn ball_csv_has_header_and_rows() {
        let ctx = ctx2();
        let ball = ball_boundary_sample(&ctx, NormKind::Gauge, 8).unwrap();
        let csv = render_ball_csv(&ball);
        assert!(csv.starts_with("# unit ball boundary: kind=gauge"));
        assert!(csv.contains("angle,px,py\n"));
        assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 9);
    }

    #[test]
    fn null_supported_detection() {
        let s = SampleSpace::indexed(2);
        let z = Measure::new(s.clone(), vec![1.0, 0.0]).unwrap();
        assert!(is_null_supported(&rv(&[0.0, 3.0]), &z));
        assert!(!is_null_supported(&rv(&[1.0, 3.0]), &z));
        assert!(!is_null_supported(&rv(&[0.0, 0.0]), &z));
        let ctx = NormContext::new(z, SolverConfig::default()).unwrap();
        assert_eq!(support_norm_dual(&rv(&[0.0, 3.0]), &ctx).unwrap(), 0.0);
        assert_eq!(gauge_norm_dual(&rv(&[0.0, 3.0]), &ctx).unwrap(), 0.0);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("support".parse::<NormKind>().unwrap(), NormKind::Support);
        assert_eq!(
            "luxemburg:phi_neg_abs".parse::<NormKind>().unwrap(),
            NormKind::Luxemburg(LuxemburgVariant::PhiNegAbs)
        );
        assert!("nope".parse::<NormKind>().is_err());
        assert!("luxemburg:nope".parse::<NormKind>().is_err());
    }

    #[test]
    fn rejects_zero_base() {
        let s = SampleSpace::indexed(2);
        let zero = Measure::zero(s);
        assert!(NormContext::new(zero, SolverConfig::default()).is_err());
    }
}

//! Polar-set calculus on finite-dimensional polytopes: gauges, support
//! functions, polars, symmetrizations, and the absorbing/bounded/balanced
//! predicates.
//!
//! A [`VPolytope`] always denotes `co[{vertices} u {0}]`, so 0 is a member
//! by construction; an [`HPolytope`] is `{x : <a_j, x> <= 1 for all j}`,
//! which contains 0 in its interior. The V-polytope gauge runs a bisection
//! over a membership oracle backed by the dense feasibility simplex in
//! [`crate::simplex`].

use serde::{Deserialize, Serialize};

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::simplex;

/// Convex hull of a finite vertex list together with the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

/// Intersection of halfspaces `<a_j, x> <= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPolytope {
    dim: usize,
    functionals: Vec<Vec<f64>>,
}

fn check_rows(dim: usize, rows: &[Vec<f64>]) -> Result<()> {
    if dim == 0 {
        return Err(Error::Domain("polytope dimension must be >= 1".into()));
    }
    for row in rows {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: row.len(),
            });
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::NotFinite("polytope row".into()));
        }
    }
    Ok(())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl VPolytope {
    /// An empty vertex list denotes the singleton `{0}`.
    pub fn new(dim: usize, vertices: Vec<Vec<f64>>) -> Result<Self> {
        check_rows(dim, &vertices)?;
        Ok(Self { dim, vertices })
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            dim,
            vertices: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// V-polytopes are convex hulls of finitely many points.
    pub fn is_bounded(&self) -> bool {
        true
    }

    /// 0 lies in the interior iff the gauge is finite along every `+-e_i`;
    /// by convexity the basis directions decide all of them.
    pub fn is_absorbing(&self, cfg: &SolverConfig) -> Result<bool> {
        for i in 0..self.dim {
            for sign in [1.0, -1.0] {
                let mut d = vec![0.0; self.dim];
                d[i] = sign;
                if gauge_vpolytope(self, &d, cfg)?.is_infinite() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Vertex set closed under negation up to `tol`.
    pub fn is_balanced(&self, tol: f64) -> bool {
        rows_balanced(&self.vertices, tol)
    }
}

impl HPolytope {
    pub fn new(dim: usize, functionals: Vec<Vec<f64>>) -> Result<Self> {
        check_rows(dim, &functionals)?;
        Ok(Self { dim, functionals })
    }

    pub fn whole_space(dim: usize) -> Self {
        Self {
            dim,
            functionals: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn functionals(&self) -> &[Vec<f64>] {
        &self.functionals
    }

    /// Exact boundedness: the recession cone `{d : <a_j, d> <= 0}` must be
    /// trivial. Cheap sign probes catch most unbounded sets; feasibility
    /// solves over `{A d <= 0, d_i = +-1}` certify the rest in any
    /// dimension.
    pub fn is_bounded(&self) -> Result<bool> {
        if self.functionals.is_empty() {
            return Ok(false);
        }
        // probe +-basis and a few fixed diagonal directions
        let mut probes: Vec<Vec<f64>> = Vec::new();
        for i in 0..self.dim {
            for sign in [1.0, -1.0] {
                let mut d = vec![0.0; self.dim];
                d[i] = sign;
                probes.push(d);
            }
        }
        probes.push(vec![1.0; self.dim]);
        probes.push(vec![-1.0; self.dim]);
        for d in probes {
            if self.functionals.iter().all(|a| dot(a, &d) <= 0.0) {
                return Ok(false);
            }
        }
        for i in 0..self.dim {
            for sign in [1.0, -1.0] {
                if self.recession_direction_exists(i, sign)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Feasibility of `{A d <= 0, d_i = sign}` with `d` free (split into
    /// `u - w`) and one slack per inequality.
    fn recession_direction_exists(&self, i: usize, sign: f64) -> Result<bool> {
        let d = self.dim;
        let m = self.functionals.len();
        let cols = 2 * d + m;
        let mut a = Vec::with_capacity(m + 1);
        for (j, f) in self.functionals.iter().enumerate() {
            let mut row = vec![0.0; cols];
            for k in 0..d {
                row[k] = f[k];
                row[d + k] = -f[k];
            }
            row[2 * d + j] = 1.0;
            a.push(row);
        }
        let mut row = vec![0.0; cols];
        row[i] = 1.0;
        row[d + i] = -1.0;
        a.push(row);
        let mut b = vec![0.0; m];
        b.push(sign);
        Ok(simplex::feasible(&a, &b)?.is_feasible())
    }

    /// Finitely many halfspaces through an interior origin absorb every
    /// direction, so an H-polytope is always absorbing.
    pub fn is_absorbing(&self) -> bool {
        true
    }

    pub fn is_balanced(&self, tol: f64) -> bool {
        rows_balanced(&self.functionals, tol)
    }
}

fn rows_balanced(rows: &[Vec<f64>], tol: f64) -> bool {
    rows.iter().all(|r| {
        rows.iter()
            .any(|s| r.iter().zip(s).all(|(a, b)| (a + b).abs() <= tol))
    })
}

/// `M° = {x : <x, v> <= 1 for every vertex v}`; vertex constraints suffice
/// because the constraint set of the polar is convex.
pub fn polar_of_vpolytope(m: &VPolytope) -> HPolytope {
    HPolytope {
        dim: m.dim,
        functionals: m.vertices.clone(),
    }
}

/// By bipolarity `N° = co[{a_j} u {0}]` for `N = {x : <a_j, x> <= 1}`.
pub fn polar_of_hpolytope(n: &HPolytope) -> VPolytope {
    VPolytope {
        dim: n.dim,
        vertices: n.functionals.clone(),
    }
}

/// Support function `s_M(x) = max(0, max_v <x, v>)`; the 0 term is the
/// origin vertex.
pub fn support_vpolytope(m: &VPolytope, x: &[f64]) -> Result<f64> {
    if x.len() != m.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: x.len(),
        });
    }
    Ok(m.vertices
        .iter()
        .fold(0.0_f64, |acc, v| acc.max(dot(x, v))))
}

/// Gauge of an H-polytope: `mu_N(x) = max(0, max_j <a_j, x>)`. Zero on the
/// recession cone, finite everywhere (H-polytopes are absorbing).
pub fn gauge_hpolytope(n: &HPolytope, x: &[f64]) -> Result<f64> {
    if x.len() != n.dim {
        return Err(Error::DimensionMismatch {
            expected: n.dim,
            got: x.len(),
        });
    }
    Ok(n.functionals
        .iter()
        .fold(0.0_f64, |acc, a| acc.max(dot(a, x))))
}

/// Membership of `point` in `co[{vertices} u {0}]`, decided by the
/// feasibility of `V lambda = point, lambda >= 0, sum lambda <= 1`.
pub fn member_vpolytope(m: &VPolytope, point: &[f64]) -> Result<bool> {
    if point.len() != m.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: point.len(),
        });
    }
    let n = m.vertices.len();
    let mut a = Vec::with_capacity(m.dim + 1);
    for k in 0..m.dim {
        let mut row = vec![0.0; n + 1];
        for (j, v) in m.vertices.iter().enumerate() {
            row[j] = v[k];
        }
        a.push(row);
    }
    let mut budget = vec![1.0; n + 1];
    budget[n] = 1.0;
    a.push(budget);
    let mut b = point.to_vec();
    b.push(1.0);
    Ok(simplex::feasible(&a, &b)?.is_feasible())
}

/// Whether `x` lies in the conic hull `{ sum c_i v_i : c >= 0 }` of the
/// vertices, i.e. whether some positive multiple of `x` enters the hull.
fn in_conic_hull(m: &VPolytope, x: &[f64]) -> Result<bool> {
    let n = m.vertices.len();
    let mut a = Vec::with_capacity(m.dim);
    for k in 0..m.dim {
        let mut row = vec![0.0; n];
        for (j, v) in m.vertices.iter().enumerate() {
            row[j] = v[k];
        }
        a.push(row);
    }
    Ok(simplex::feasible(&a, x)?.is_feasible())
}

/// Gauge of a V-polytope by bisection on the scale over the membership
/// oracle. Returns `+inf` when `x` is not absorbed; absorption is decided
/// exactly through the conic-hull feasibility of `x` (the scale cap
/// `cfg.alpha_max` stays as a defensive stop only).
pub fn gauge_vpolytope(m: &VPolytope, x: &[f64], cfg: &SolverConfig) -> Result<f64> {
    if x.len() != m.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: x.len(),
        });
    }
    if x.iter().all(|&v| v == 0.0) {
        return Ok(0.0);
    }
    if !in_conic_hull(m, x)? {
        return Ok(f64::INFINITY);
    }
    let scaled = |alpha: f64| -> Vec<f64> { x.iter().map(|v| v / alpha).collect() };

    let mut hi = 1.0;
    while !member_vpolytope(m, &scaled(hi))? {
        hi *= cfg.bracket_growth;
        if hi > cfg.alpha_max {
            return Ok(f64::INFINITY);
        }
    }
    let mut lo = 0.0;
    for _ in 0..cfg.max_iter {
        if hi - lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if member_vpolytope(m, &scaled(mid))? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `co[-M u M]`: the vertex list together with its negation.
pub fn symmetrize_union(m: &VPolytope) -> VPolytope {
    let mut vertices = m.vertices.clone();
    vertices.extend(m.vertices.iter().map(|v| v.iter().map(|c| -c).collect()));
    VPolytope {
        dim: m.dim,
        vertices,
    }
}

/// `-N n N`: the functional list together with its negation.
pub fn symmetrize_intersection(n: &HPolytope) -> HPolytope {
    let mut functionals = n.functionals.clone();
    functionals.extend(n.functionals.iter().map(|a| a.iter().map(|c| -c).collect()));
    HPolytope {
        dim: n.dim,
        functionals,
    }
}

/// Which symmetrization of the support function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymVariant {
    /// `s[-M u M](x) = max(s_M(-x), s_M(x))` — exact.
    Sup,
    /// `s[-M n M](x) = inf_z { s_M(z) + s_M(z - x) }` — approximated by a
    /// grid-seeded multi-start compass descent; dimension <= 3.
    Inf,
}

pub fn support_symmetrized(
    m: &VPolytope,
    x: &[f64],
    variant: SymVariant,
    cfg: &SolverConfig,
) -> Result<f64> {
    match variant {
        SymVariant::Sup => {
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            Ok(support_vpolytope(m, x)?.max(support_vpolytope(m, &neg)?))
        }
        SymVariant::Inf => {
            if m.dim > 3 {
                return Err(Error::DimensionTooLarge {
                    limit: 3,
                    got: m.dim,
                });
            }
            if x.len() != m.dim {
                return Err(Error::DimensionMismatch {
                    expected: m.dim,
                    got: x.len(),
                });
            }
            Ok(inf_convolution(m, x, cfg))
        }
    }
}

/// Minimizes the convex piecewise-linear `psi(z) = s_M(z) + s_M(z - x)` by
/// multi-start pattern descent from a coarse grid seed.
///
/// The pattern includes every sign vector plus the difference directions of
/// the point set (the kink edges of the piecewise-linear subdivision run
/// along those), which keeps the descent from stalling on a kink.
fn inf_convolution(m: &VPolytope, x: &[f64], cfg: &SolverConfig) -> f64 {
    let d = m.dim;
    let psi = |z: &[f64]| -> f64 {
        let shifted: Vec<f64> = z.iter().zip(x).map(|(zi, xi)| zi - xi).collect();
        support_vpolytope(m, z).unwrap() + support_vpolytope(m, &shifted).unwrap()
    };

    let vertex_scale = m
        .vertices
        .iter()
        .flat_map(|v| v.iter())
        .fold(0.0_f64, |acc, c| acc.max(c.abs()));
    let x_scale = x.iter().fold(0.0_f64, |acc, c| acc.max(c.abs()));
    let radius = 2.0 * (x_scale + vertex_scale + 1.0);

    // coarse grid seed
    let per_axis = 13usize;
    let mut seeds: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut grid_index = vec![0usize; d];
    loop {
        let z: Vec<f64> = grid_index
            .iter()
            .map(|&k| -radius + 2.0 * radius * k as f64 / (per_axis - 1) as f64)
            .collect();
        seeds.push((psi(&z), z));
        // odometer increment
        let mut axis = 0;
        loop {
            grid_index[axis] += 1;
            if grid_index[axis] < per_axis {
                break;
            }
            grid_index[axis] = 0;
            axis += 1;
            if axis == d {
                break;
            }
        }
        if axis == d {
            break;
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
    seeds.truncate(4);
    for z in [vec![0.0; d], x.to_vec(), x.iter().map(|v| 0.5 * v).collect()] {
        seeds.push((psi(&z), z));
    }

    let mut directions: Vec<Vec<f64>> = Vec::new();
    let mut push_dir = |dir: Vec<f64>| {
        let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-12 {
            let unit: Vec<f64> = dir.iter().map(|v| v / norm).collect();
            let dup = directions
                .iter()
                .any(|u: &Vec<f64>| u.iter().zip(&unit).all(|(a, b)| (a - b).abs() < 1e-9));
            if !dup {
                directions.push(unit);
            }
        }
    };
    // all sign vectors
    let mut signs = vec![-1i8; d];
    'outer: loop {
        if signs.iter().any(|&s| s != 0) {
            push_dir(signs.iter().map(|&s| s as f64).collect());
        }
        let mut axis = 0;
        loop {
            signs[axis] += 1;
            if signs[axis] <= 1 {
                break;
            }
            signs[axis] = -1;
            axis += 1;
            if axis == d {
                break 'outer;
            }
        }
    }
    // point differences (0 included) and their negations
    let mut points: Vec<Vec<f64>> = m.vertices.clone();
    points.push(vec![0.0; d]);
    for (i, p) in points.iter().enumerate() {
        for q in points.iter().skip(i + 1) {
            let diff: Vec<f64> = p.iter().zip(q).map(|(a, b)| a - b).collect();
            push_dir(diff.iter().map(|v| -v).collect());
            push_dir(diff);
        }
    }

    let mut best = f64::INFINITY;
    for (val, seed) in seeds {
        let mut cur = seed;
        let mut cur_val = val;
        let mut step = radius / 4.0;
        while step > cfg.inf_conv_tol * 1e-3 {
            let mut improved = false;
            for dir in &directions {
                let cand: Vec<f64> = cur.iter().zip(dir).map(|(c, s)| c + step * s).collect();
                let v = psi(&cand);
                if v < cur_val - 1e-15 {
                    cur = cand;
                    cur_val = v;
                    improved = true;
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best = best.min(cur_val);
    }
    best
}

/// Vertex enumeration of a *bounded* H-polytope by constraint-intersection,
/// dimension <= 3. Each `dim`-subset of active constraints contributes a
/// candidate; candidates violating any halfspace are discarded.
pub fn vertex_enumeration(n: &HPolytope) -> Result<VPolytope> {
    if n.dim > 3 {
        return Err(Error::DimensionTooLarge {
            limit: 3,
            got: n.dim,
        });
    }
    if !n.is_bounded()? {
        return Err(Error::UnboundedPolytope);
    }
    let d = n.dim;
    let m = n.functionals.len();
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    let mut subset = vec![0usize; d];
    enumerate_subsets(m, d, &mut subset, 0, 0, &mut |idx: &[usize]| {
        let a: Vec<&[f64]> = idx.iter().map(|&j| n.functionals[j].as_slice()).collect();
        if let Some(x) = solve_small(&a) {
            let inside = n
                .functionals
                .iter()
                .all(|f| dot(f, &x) <= 1.0 + 1e-9);
            if inside {
                let dup = vertices
                    .iter()
                    .any(|v| v.iter().zip(&x).all(|(a, b)| (a - b).abs() <= 1e-9));
                if !dup {
                    vertices.push(x);
                }
            }
        }
    });
    Ok(VPolytope { dim: d, vertices })
}

fn enumerate_subsets(
    m: usize,
    d: usize,
    subset: &mut Vec<usize>,
    depth: usize,
    start: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == d {
        visit(subset);
        return;
    }
    for j in start..m {
        subset[depth] = j;
        enumerate_subsets(m, d, subset, depth + 1, j + 1, visit);
    }
}

/// Solves `<a_j, x> = 1` for a square system of up to 3 rows; `None` when
/// singular.
fn solve_small(rows: &[&[f64]]) -> Option<Vec<f64>> {
    let d = rows.len();
    let mut m: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| {
            let mut row = r.to_vec();
            row.push(1.0);
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        let p = m[col][col];
        for k in col..=d {
            m[col][k] /= p;
        }
        for i in 0..d {
            if i != col && m[i][col] != 0.0 {
                let f = m[i][col];
                for k in col..=d {
                    m[i][k] -= f * m[col][k];
                }
            }
        }
    }
    Some(m.iter().map(|r| r[d]).collect())
}

// ---------------------------------------------------------------------------
// JSON interface
// ---------------------------------------------------------------------------

/// Tagged union for the on-disk polytope schema
/// `{"dim": d, "kind": "V"|"H", "rows": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Polytope {
    V(VPolytope),
    H(HPolytope),
}

#[derive(Serialize, Deserialize)]
struct PolytopeFile {
    dim: usize,
    kind: String,
    rows: Vec<Vec<f64>>,
}

pub fn parse_polytope(data: &str) -> Result<Polytope> {
    let file: PolytopeFile = serde_json::from_str(data)?;
    match file.kind.as_str() {
        "V" => Ok(Polytope::V(VPolytope::new(file.dim, file.rows)?)),
        "H" => Ok(Polytope::H(HPolytope::new(file.dim, file.rows)?)),
        other => Err(Error::Parse(format!("unknown polytope kind `{other}`"))),
    }
}

pub fn render_polytope(p: &Polytope) -> Result<String> {
    let file = match p {
        Polytope::V(v) => PolytopeFile {
            dim: v.dim,
            kind: "V".into(),
            rows: v.vertices.clone(),
        },
        Polytope::H(h) => PolytopeFile {
            dim: h.dim,
            kind: "H".into(),
            rows: h.functionals.clone(),
        },
    };
    Ok(serde_json::to_string(&file)?)
}

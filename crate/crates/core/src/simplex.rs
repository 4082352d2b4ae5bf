//! Dense phase-1 primal simplex for small feasibility problems.
//!
//! Decides whether `{ lambda >= 0 : A lambda = b }` is nonempty. Bland's
//! anti-cycling rule keeps termination unconditional; the pivot cap is a
//! defensive guard only. Intended scale is a handful of rows (space
//! dimension <= 16) and up to a few hundred columns.

use crate::error::{Error, Result};

const ENTER_EPS: f64 = 1e-12;
const PIVOT_EPS: f64 = 1e-9;

/// Outcome of a feasibility solve.
#[derive(Debug, Clone)]
pub enum Feasibility {
    /// A feasible point, indexed like the columns of `a`.
    Feasible(Vec<f64>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Phase-1 simplex on the equality system `A lambda = b`, `lambda >= 0`.
///
/// `a` holds one row per constraint. Feasibility is decided up to an
/// absolute residual of `1e-11 * (1 + |b|_inf)` in the artificial
/// objective; the gauge bisection leans on this threshold staying well
/// below its own 1e-12 interval width.
pub fn feasible(a: &[Vec<f64>], b: &[f64]) -> Result<Feasibility> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    if m == 0 {
        return Ok(Feasibility::Feasible(Vec::new()));
    }
    let n = a[0].len();

    // Tableau: n structural columns, m artificial columns, rhs.
    // Rows are flipped so the rhs is nonnegative and artificials can start
    // as the basis.
    let mut t = vec![vec![0.0_f64; n + m + 1]; m];
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i][j] = flip * row[j];
        }
        t[i][n + i] = 1.0;
        t[i][n + m] = flip * b[i];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced-cost row for the artificial objective w = sum of artificials.
    // With the artificial basis, r_j = -sum_i t[i][j] over structural columns.
    let mut r = vec![0.0_f64; n + m];
    let mut w: f64 = 0.0;
    for i in 0..m {
        for j in 0..n {
            r[j] -= t[i][j];
        }
        w += t[i][n + m];
    }

    let scale = 1.0 + b.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let pivot_cap = 200 * (n + m + 1);

    for _ in 0..pivot_cap {
        // Bland: smallest-index structural column with negative reduced cost.
        // Artificials never re-enter once they leave.
        let enter = (0..n).find(|&j| r[j] < -ENTER_EPS);
        let Some(enter) = enter else {
            return Ok(if w.abs() <= 1e-11 * scale {
                Feasibility::Feasible(extract(&t, &basis, n, m))
            } else {
                Feasibility::Infeasible
            });
        };

        // Ratio test; ties broken by smallest basis variable (Bland).
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            if t[i][enter] > PIVOT_EPS {
                let ratio = t[i][n + m] / t[i][enter];
                let better = ratio < best - 1e-15
                    || (ratio <= best + 1e-15 && leave.is_some_and(|l| basis[i] < basis[l]));
                if better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // Phase-1 objective is bounded below by zero, so an unbounded
            // column is numerical noise; declare it nonimproving.
            return Ok(Feasibility::Infeasible);
        };

        // Pivot on (leave, enter).
        let piv = t[leave][enter];
        for v in t[leave].iter_mut() {
            *v /= piv;
        }
        for i in 0..m {
            if i != leave {
                let factor = t[i][enter];
                if factor != 0.0 {
                    for j in 0..=n + m {
                        t[i][j] -= factor * t[leave][j];
                    }
                }
            }
        }
        let rf = r[enter];
        for j in 0..n + m {
            r[j] -= rf * t[leave][j];
        }
        w += rf * t[leave][n + m];
        basis[leave] = enter;
    }

    Err(Error::PivotLimit(pivot_cap))
}

fn extract(t: &[Vec<f64>], basis: &[usize], n: usize, m: usize) -> Vec<f64> {
    let mut x = vec![0.0_f64; n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][n + m];
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solves(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
        match feasible(a, b).unwrap() {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }

    #[test]
    fn simple_feasible_system() {
        // lambda1 + lambda2 = 1 with lambda >= 0
        let x = solves(&[vec![1.0, 1.0]], &[1.0]).expect("feasible");
        assert!((x[0] + x[1] - 1.0).abs() < 1e-12);
        assert!(x.iter().all(|&v| v >= -1e-12));
    }

    #[test]
    fn infeasible_negative_target() {
        // lambda1 + lambda2 = -1 is impossible for nonnegative lambda.
        assert!(solves(&[vec![1.0, 1.0]], &[-1.0]).is_none());
    }

    #[test]
    fn convex_combination_reaches_interior_point() {
        // Point (0.25, 0.25) as a combination of (1,0), (0,1), budget <= 1:
        // columns: l1, l2, slack
        let a = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 1.0],
        ];
        let x = solves(&a, &[0.25, 0.25, 1.0]).expect("inside the simplex");
        assert!((x[0] - 0.25).abs() < 1e-10 && (x[1] - 0.25).abs() < 1e-10);
    }

    #[test]
    fn point_outside_hull_is_infeasible() {
        // (1.5, 0) is outside co{(1,0),(0,1),0}.
        let a = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 1.0],
        ];
        assert!(solves(&a, &[1.5, 0.0, 1.0]).is_none());
    }

    #[test]
    fn degenerate_rows_terminate() {
        // Redundant constraints with a degenerate vertex; Bland must not cycle.
        let a = vec![
            vec![1.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![0.0, 1.0, 1.0],
        ];
        let x = solves(&a, &[1.0, 1.0, 1.0]).expect("feasible");
        assert!((x[0] + x[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn free_variable_split_recession_direction() {
        // d with A d <= 0, d_1 = 1 for A = [[1,0]] is infeasible (d_1 must
        // be <= 0), while for A = [[-1,0]] it is feasible. Free d is split
        // d = u - v, slack s closes the inequality.
        let build = |sign: f64| {
            (
                vec![
                    vec![sign, 0.0, -sign, 0.0, 1.0], // sign*d1 + s = 0
                    vec![1.0, 0.0, -1.0, 0.0, 0.0],   // d1 = 1
                ],
                vec![0.0, 1.0],
            )
        };
        let (a, b) = build(1.0);
        assert!(solves(&a, &b).is_none());
        let (a, b) = build(-1.0);
        assert!(solves(&a, &b).is_some());
    }
}

//! Sound lower bounds on `min_x T(x)` from samples on the half-period grid
//! `x_j = j/(2M)`, `j = 0..=M`. Evenness and periodicity reduce the real
//! line to `[0, 1/2]`, and every point there is within `1/(4M)` of a node.

use serde::Serialize;

use crate::cospoly::CosPoly;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Certificate {
    /// `T(x) >= certified_min` for all real `x`.
    pub certified_min: f64,
    /// Derivative bound entering the remainder term.
    pub bound: f64,
    /// Smallest sampled value.
    pub grid_min: f64,
    pub grid: usize,
}

fn node(j: usize, grid: usize) -> f64 {
    j as f64 / (2 * grid) as f64
}

/// First-order certificate: `min_j T(x_j) - B/(4M)` with `B = sum 2 pi k |t_k|`.
pub fn lipschitz_certify(poly: &CosPoly, grid: usize) -> Certificate {
    let grid = grid.max(1);
    let bound = poly.derivative_bound(1);
    let grid_min = (0..=grid)
        .map(|j| poly.eval(node(j, grid)))
        .fold(f64::INFINITY, f64::min);
    Certificate {
        certified_min: grid_min - bound / (4 * grid) as f64,
        bound,
        grid_min,
        grid,
    }
}

/// Third-order certificate. On each cell `|x - x_j| <= r`, `r = 1/(4M)`, the
/// cubic Taylor model is minimized exactly and the remainder is bounded by
/// `B4 r^4 / 24` with `B4 = sum (2 pi k)^4 |t_k|`. Unlike the first-order
/// bound it stays tight near double zeros.
pub fn taylor_certify(poly: &CosPoly, grid: usize) -> Certificate {
    let grid = grid.max(1);
    let r = 1.0 / (4 * grid) as f64;
    let bound = poly.derivative_bound(4);
    let mut model_min = f64::INFINITY;
    let mut grid_min = f64::INFINITY;
    for j in 0..=grid {
        let d = poly.eval_with_derivatives(node(j, grid));
        grid_min = grid_min.min(d[0]);
        model_min = model_min.min(cubic_min(d, r));
    }
    Certificate {
        certified_min: model_min - bound * r.powi(4) / 24.0,
        bound,
        grid_min,
        grid,
    }
}

/// Minimum of `a + b u + c u^2/2 + d u^3/6` over `|u| <= r`.
fn cubic_min([a, b, c, d]: [f64; 4], r: f64) -> f64 {
    let p = |u: f64| a + u * (b + u * (c / 2.0 + u * d / 6.0));
    let mut best = p(-r).min(p(r));
    // Critical points solve b + c u + (d/2) u^2 = 0.
    let (qa, qb, qc) = (d / 2.0, c, b);
    let mut consider = |u: f64| {
        if u.is_finite() && u.abs() <= r {
            best = best.min(p(u));
        }
    };
    if qa == 0.0 {
        if qb != 0.0 {
            consider(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc >= 0.0 {
            let s = -0.5 * (qb + qb.signum() * disc.sqrt());
            if s != 0.0 {
                consider(s / qa);
                consider(qc / s);
            } else {
                consider(0.0);
            }
        }
    }
    best
}

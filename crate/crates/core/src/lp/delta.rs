use serde::Serialize;

use super::simplex::{simplex_solve, Bound, LpProblem, LpResult, LpStatus, Relation};
use super::{GridCos, DEFAULT_MAX_ITERS};
use crate::cospoly::CosPoly;
use crate::cutoff::RationalCutoff;
use crate::error::{Error, Result};
use crate::support::{truncate_support, SupportSet};

/// Solution of the grid relaxation of `delta(K)` for a finite `K`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaLp {
    pub status: LpStatus,
    /// Minimal constant term; a lower bound on `delta` over polynomials supported in `K`.
    pub value: f64,
    /// Optimizing polynomial, dense in frequency.
    #[serde(rename = "coeffs", serialize_with = "dense_coeffs")]
    pub poly: CosPoly,
    pub grid: usize,
    pub iterations: usize,
    #[serde(skip)]
    pub support: Vec<usize>,
    /// Largest violation of `T(x_j) >= 0` and `T(0) = 1` by `poly`.
    #[serde(skip)]
    pub max_violation: f64,
}

fn dense_coeffs<S: serde::Serializer>(p: &CosPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.coeffs().serialize(s)
}

impl DeltaLp {
    /// `[T_0, T_k for k in support]`, the variables of the primal problem.
    pub fn solution(&self) -> Vec<f64> {
        std::iter::once(self.poly.t0())
            .chain(self.support.iter().map(|&k| self.poly.coeffs()[k]))
            .collect()
    }
}

/// Minimizes `T_0` over `T = T_0 + sum_{k in K} T_k cos(2 pi k x)` subject
/// to `T(j/(2M)) >= 0` for `j = 0..=M` and `T(0) = 1`.
///
/// The primal has `|K| + 1` free variables and `M + 2` rows, so the solver
/// works on the dual (a nonnegative measure on the grid plus one free
/// variable) and reads the polynomial off the dual multipliers. Grid points
/// enter the dual lazily: starting from a coarse subgrid, the negative local
/// minima of the current `T` on the full grid are added until `T >= 0` on
/// every grid point, at which point both problems are optimal.
pub fn delta_grid_lp(set: &SupportSet, grid: usize) -> Result<DeltaLp> {
    let support = set
        .elements()
        .ok_or_else(|| Error::InvalidSupport("grid LP needs a finite support set".into()))?
        .to_vec();
    let max_k = *support.last().ok_or(Error::EmptySupport)?;
    if grid < 2 * max_k {
        return Err(Error::GridTooSmall {
            grid,
            required: 2 * max_k,
        });
    }

    // Coarsest subgrid dividing the grid that still resolves 4 * max(K).
    let stride = (1..=grid / (4 * max_k).max(1))
        .rev()
        .find(|&s| grid.is_multiple_of(s))
        .unwrap_or(1);
    let mut points: Vec<usize> = (0..=grid).step_by(stride).collect();
    let cos = GridCos::new(grid);
    let mut iterations = 0;
    let mut outcome = None;
    for _ in 0..GENERATION_ROUNDS {
        let dual = solve_dual(&support, &cos, &points)?;
        iterations += dual.iterations;
        if dual.status != LpStatus::Optimal {
            break;
        }
        let poly = primal_poly(&support, &dual.duals);
        let values = grid_values(&poly, &support, &cos);
        let added: Vec<usize> = (0..=grid)
            .filter(|&j| {
                values[j] < -GENERATION_TOL
                    && (j == 0 || values[j] <= values[j - 1])
                    && (j == grid || values[j] <= values[j + 1])
            })
            .collect();
        if added.is_empty() {
            outcome = Some(poly);
            break;
        }
        points.extend(added);
        points.sort_unstable();
        points.dedup();
    }

    let poly = match outcome {
        Some(poly) => poly,
        None => {
            let all: Vec<usize> = (0..=grid).collect();
            let dual = solve_dual(&support, &cos, &all)?;
            iterations += dual.iterations;
            let status = match dual.status {
                LpStatus::Optimal => LpStatus::Optimal,
                // Infeasible dual <=> unbounded primal (T = 1 is always primal feasible).
                LpStatus::Infeasible => LpStatus::Unbounded,
                LpStatus::Unbounded => LpStatus::Infeasible,
                LpStatus::IterationLimit => LpStatus::IterationLimit,
            };
            if status != LpStatus::Optimal {
                return Ok(DeltaLp {
                    status,
                    value: f64::NAN,
                    poly: CosPoly::constant(f64::NAN),
                    grid,
                    iterations,
                    support,
                    max_violation: f64::NAN,
                });
            }
            primal_poly(&support, &dual.duals)
        }
    };
    let max_violation = grid_violation(&poly, &support, &cos);
    Ok(DeltaLp {
        status: LpStatus::Optimal,
        value: poly.t0(),
        poly,
        grid,
        iterations,
        support,
        max_violation,
    })
}

const GENERATION_ROUNDS: usize = 200;
const GENERATION_TOL: f64 = 1e-12;

/// Dual restricted to the grid indices in `points`: maximize `mu` over
/// `lambda >= 0` with `sum lambda_j = 1 - mu` and
/// `sum lambda_j cos(2 pi k x_j) = -mu` for `k in K`.
fn solve_dual(support: &[usize], cos: &GridCos, points: &[usize]) -> Result<LpResult> {
    let n = points.len() + 1;
    let mut objective = vec![0.0; n];
    objective[n - 1] = -1.0;
    let mut bounds = vec![Bound::NonNegative; n];
    bounds[n - 1] = Bound::Free;
    let mut prob = LpProblem::new(objective, bounds);

    // Row for frequency 0 (T_0) then one per k in K.
    let mut row = vec![1.0; n];
    prob.add_constraint(row.clone(), Relation::Eq, 1.0);
    for &k in support {
        for (a, &j) in row.iter_mut().zip(points) {
            *a = cos.at(k, j);
        }
        prob.add_constraint(row.clone(), Relation::Eq, 0.0);
    }
    simplex_solve(&prob, DEFAULT_MAX_ITERS)
}

fn primal_poly(support: &[usize], duals: &[f64]) -> CosPoly {
    CosPoly::from_terms(
        -duals[0],
        support.iter().copied().zip(duals[1..].iter().map(|y| -y)),
    )
}

fn grid_values(poly: &CosPoly, support: &[usize], cos: &GridCos) -> Vec<f64> {
    let c = poly.coeffs();
    (0..=cos.grid())
        .map(|j| c[0] + support.iter().map(|&k| c[k] * cos.at(k, j)).sum::<f64>())
        .collect()
}

fn grid_violation(poly: &CosPoly, support: &[usize], cos: &GridCos) -> f64 {
    let worst_grid = grid_values(poly, support, cos)
        .into_iter()
        .fold(0.0f64, |w, v| w.max(-v));
    worst_grid.max((poly.value_at_zero() - 1.0).abs())
}

/// Grid LP on `K_{p,q}` truncated after `periods` full periods, i.e. on
/// `{k in q Z_+ + {p..q-p} : k <= q*periods + q - p}`.
pub fn delta_periodic_lp(h: RationalCutoff, periods: usize, grid: usize) -> Result<DeltaLp> {
    let set = SupportSet::periodic_block(h);
    let truncated = truncate_support(&set, h.q() * periods + h.q() - h.p())?;
    delta_grid_lp(&truncated, grid)
}

use serde::Serialize;

use super::simplex::{simplex_solve, Bound, LpProblem, LpStatus, Relation};
use super::{GridCos, DEFAULT_MAX_ITERS};
use crate::cospoly::CosPoly;
use crate::cutoff::RationalCutoff;
use crate::error::{Error, Result};

/// Finite-dimensional estimate of `A(h)`. Not a certified bound: truncating
/// the degree pushes the value down, relaxing the vanishing condition to a
/// grid with slack pushes it up.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TuranEstimate {
    pub status: LpStatus,
    /// Estimated `a_0`.
    pub value: f64,
    #[serde(rename = "coeffs", serialize_with = "dense_coeffs")]
    pub poly: CosPoly,
    pub degree: usize,
    pub grid: usize,
    pub eps: f64,
    pub iterations: usize,
}

fn dense_coeffs<S: serde::Serializer>(p: &CosPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.coeffs().serialize(s)
}

/// Maximizes `a_0` over `a_0..a_N >= 0` with `sum a_n = 1` and
/// `|f(j/(2M))| <= eps` for every grid point in `[h, 1/2]`.
pub fn turan_relaxed_lp(
    h: RationalCutoff,
    degree: usize,
    grid: usize,
    eps: f64,
) -> Result<TuranEstimate> {
    if degree < h.q() {
        return Err(Error::PreconditionViolated(format!(
            "degree {degree} must be at least q = {}",
            h.q()
        )));
    }
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::PreconditionViolated("eps must be positive".into()));
    }
    if grid < 1 {
        return Err(Error::GridTooSmall { grid, required: 1 });
    }

    let n = degree + 1;
    let mut objective = vec![0.0; n];
    objective[0] = -1.0;
    let mut prob = LpProblem::new(objective, vec![Bound::NonNegative; n]);
    prob.add_constraint(vec![1.0; n], Relation::Eq, 1.0);

    let cos = GridCos::new(grid);
    // First grid index with j/(2M) >= p/q.
    let first = (2 * grid * h.p()).div_ceil(h.q());
    for j in first..=grid {
        let row: Vec<f64> = (0..n).map(|k| cos.at(k, j)).collect();
        prob.add_constraint(row.clone(), Relation::Le, eps);
        prob.add_constraint(row, Relation::Ge, -eps);
    }

    let r = simplex_solve(&prob, DEFAULT_MAX_ITERS)?;
    match r.status {
        LpStatus::Optimal => Ok(TuranEstimate {
            status: r.status,
            value: r.solution[0],
            poly: CosPoly::new(r.solution),
            degree,
            grid,
            eps,
            iterations: r.iterations,
        }),
        LpStatus::Infeasible => Err(Error::EpsTooSmall { degree, eps }),
        status => Err(Error::Solver(status)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutoff::make_cutoff;

    #[test]
    fn feasible_point_is_a_distribution() {
        let r = turan_relaxed_lp(make_cutoff(1, 2).unwrap(), 8, 64, 1e-2).unwrap();
        let c = r.poly.coeffs();
        assert!(c.iter().all(|&a| a >= -1e-12));
        assert!((c.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        assert!(r.poly.eval(0.5).abs() <= 1e-2 + 1e-10);
    }

    #[test]
    fn preconditions() {
        let h = make_cutoff(1, 3).unwrap();
        assert!(matches!(
            turan_relaxed_lp(h, 2, 64, 1e-3),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            turan_relaxed_lp(h, 4, 64, 0.0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn tiny_eps_is_reported() {
        // Degree 3 cannot vanish on all of [1/3, 1/2] with a nonnegative mass of 1.
        let h = make_cutoff(1, 3).unwrap();
        assert_eq!(
            turan_relaxed_lp(h, 3, 256, 1e-12),
            Err(Error::EpsTooSmall {
                degree: 3,
                eps: 1e-12
            })
        );
    }
}

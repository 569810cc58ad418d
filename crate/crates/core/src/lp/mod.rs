//! Numerical oracles: a dense simplex solver, grid-discretized extremal
//! problems, and sound lower bounds for the minimum of a cosine polynomial.

mod certify;
mod delta;
mod simplex;
mod turan;

pub use certify::{lipschitz_certify, taylor_certify, Certificate};
pub use delta::{delta_grid_lp, delta_periodic_lp, DeltaLp};
pub use simplex::{
    simplex_solve, simplex_solve_with, Bound, Constraint, LpProblem, LpResult, LpStatus, PivotRule,
    Relation,
};
pub use turan::{turan_relaxed_lp, TuranEstimate};

/// Pivot budget used by the grid LPs.
pub const DEFAULT_MAX_ITERS: usize = 200_000;

/// Values of `cos(pi m / M)` for `m < 2M`, so that
/// `cos(2 pi k x_j) = cos(pi * ((k j) mod 2M) / M)` on the grid `x_j = j/(2M)`
/// is reduced exactly in integers.
pub(crate) struct GridCos {
    period: u128,
    values: Vec<f64>,
}

impl GridCos {
    pub(crate) fn new(grid: usize) -> Self {
        let values = (0..2 * grid)
            .map(|m| (std::f64::consts::PI * m as f64 / grid as f64).cos())
            .collect();
        Self {
            period: 2 * grid as u128,
            values,
        }
    }

    pub(crate) fn grid(&self) -> usize {
        self.values.len() / 2
    }

    pub(crate) fn at(&self, k: usize, j: usize) -> f64 {
        self.values[(k as u128 * j as u128 % self.period) as usize]
    }
}

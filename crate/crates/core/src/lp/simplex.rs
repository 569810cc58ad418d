//! Dense two-phase tableau simplex.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relation of a constraint row to its right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Free,
    NonNegative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `minimize c.x` subject to linear rows and per-variable sign bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub bounds: Vec<Bound>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Objective value; NaN unless `status` is `Optimal`.
    pub value: f64,
    pub solution: Vec<f64>,
    /// One multiplier per constraint row, signed so that `c - A^T y` is the
    /// reduced-cost vector (`y >= 0` on `Ge` rows, `y <= 0` on `Le` rows).
    pub duals: Vec<f64>,
    /// Pivots performed over both phases.
    pub iterations: usize,
}

/// Rule for choosing the entering column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Lowest-index improving column (Bland). Cannot cycle in exact arithmetic,
    /// but can stall for a long time on highly degenerate problems.
    Bland,
    /// Most negative reduced cost, switching to Bland's rule during long runs
    /// of degenerate pivots.
    DantzigThenBland,
    /// Largest decrease per unit length of the edge, `d_j^2 / (1 + |B^-1 a_j|^2)`,
    /// with the same fallback to Bland's rule as `DantzigThenBland`.
    #[default]
    SteepestEdge,
}

const PIVOT_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-9;
const FEAS_TOL: f64 = 1e-9;
const DEGENERATE_RUN: usize = 20_000;
/// Pivots between rebuilds of the tableau from the original data.
const REINVERT_EVERY: usize = 100;

impl LpProblem {
    pub fn new(objective: Vec<f64>, bounds: Vec<Bound>) -> Self {
        Self {
            objective,
            bounds,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(Error::MalformedProblem(format!(
                "{} bounds for {} variables",
                self.bounds.len(),
                n
            )));
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::MalformedProblem(
                "non-finite objective coefficient".into(),
            ));
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.coeffs.len() != n {
                return Err(Error::MalformedProblem(format!(
                    "row {i} has {} coefficients, expected {n}",
                    row.coeffs.len()
                )));
            }
            if !row.rhs.is_finite() || row.coeffs.iter().any(|a| !a.is_finite()) {
                return Err(Error::MalformedProblem(format!(
                    "row {i} has a non-finite entry"
                )));
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Largest violation of any row or sign bound at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self.constraints.iter().map(|row| {
            let lhs: f64 = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            match row.relation {
                Relation::Le => (lhs - row.rhs).max(0.0),
                Relation::Ge => (row.rhs - lhs).max(0.0),
                Relation::Eq => (lhs - row.rhs).abs(),
            }
        });
        let bounds = self.bounds.iter().zip(x).map(|(b, &v)| match b {
            Bound::NonNegative => (-v).max(0.0),
            Bound::Free => 0.0,
        });
        rows.chain(bounds).fold(0.0, f64::max)
    }
}

/// Solves `prob` with the default pivot rule.
pub fn simplex_solve(prob: &LpProblem, max_iters: usize) -> Result<LpResult> {
    simplex_solve_with(prob, max_iters, PivotRule::default())
}

pub fn simplex_solve_with(prob: &LpProblem, max_iters: usize, rule: PivotRule) -> Result<LpResult> {
    prob.validate()?;
    let mut tab = Tableau::build(prob);
    let m = tab.rows;

    // Phase 1: drive the artificial variables to zero.
    let mut phase1_cost = vec![0.0; tab.cols];
    for c in &mut phase1_cost[tab.first_artificial..] {
        *c = 1.0;
    }
    tab.set_costs(&phase1_cost);
    match tab.run(max_iters, rule, false, &phase1_cost) {
        Outcome::Optimal => {}
        Outcome::IterationLimit => return Ok(tab.finish(prob, LpStatus::IterationLimit)),
        Outcome::Unbounded => unreachable!("phase 1 objective is bounded below by zero"),
    }
    let scale = 1.0 + tab.max_rhs_seen;
    if tab.objective_value() > 1e-9 * scale {
        return Ok(tab.finish(prob, LpStatus::Infeasible));
    }

    // Pivot remaining zero-level artificials out of the basis where possible;
    // rows where that fails are redundant and keep their artificial at zero.
    for r in 0..m {
        if tab.basis[r] >= tab.first_artificial {
            let row = tab.row(r);
            if let Some(col) = (0..tab.first_artificial).find(|&j| row[j].abs() > PIVOT_TOL) {
                tab.pivot(r, col);
                tab.iterations += 1;
            }
        }
    }

    // Phase 2 on the original objective; artificial columns may not re-enter.
    let cost = tab.std_cost.clone();
    tab.reinvert(&cost);
    tab.set_costs(&cost);
    let status = match tab.run(max_iters, rule, true, &cost) {
        Outcome::Optimal => LpStatus::Optimal,
        Outcome::Unbounded => LpStatus::Unbounded,
        Outcome::IterationLimit => LpStatus::IterationLimit,
    };
    Ok(tab.finish(prob, status))
}

enum Outcome {
    Optimal,
    Unbounded,
    IterationLimit,
}

/// Standard-form tableau `B^-1 [A | b]` with the reduced-cost row kept apart.
struct Tableau {
    rows: usize,
    cols: usize,
    /// Row-major `rows x (cols + 1)`; the last entry of each row is the rhs.
    data: Vec<f64>,
    basis: Vec<usize>,
    reduced: Vec<f64>,
    /// Objective value of the current basic solution.
    z: f64,
    std_cost: Vec<f64>,
    /// For each standard column: (original variable, sign).
    col_source: Vec<Option<(usize, f64)>>,
    first_artificial: usize,
    /// Column that held the identity for each row in the starting basis.
    initial_basis: Vec<usize>,
    row_sign: Vec<f64>,
    iterations: usize,
    max_rhs_seen: f64,
    /// Starting tableau `[A | b]`, whose basis is the identity.
    original: Vec<f64>,
}

impl Tableau {
    fn build(prob: &LpProblem) -> Self {
        let n = prob.num_vars();
        let m = prob.constraints.len();

        let mut col_source = Vec::new();
        let mut std_cost = Vec::new();
        let mut var_cols: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n);
        for (j, b) in prob.bounds.iter().enumerate() {
            let mut cols = vec![(col_source.len(), 1.0)];
            col_source.push(Some((j, 1.0)));
            std_cost.push(prob.objective[j]);
            if *b == Bound::Free {
                cols.push((col_source.len(), -1.0));
                col_source.push(Some((j, -1.0)));
                std_cost.push(-prob.objective[j]);
            }
            var_cols.push(cols);
        }

        // Normalize every row to a nonnegative rhs.
        let row_sign: Vec<f64> = prob
            .constraints
            .iter()
            .map(|c| if c.rhs < 0.0 { -1.0 } else { 1.0 })
            .collect();
        let relations: Vec<Relation> = prob
            .constraints
            .iter()
            .zip(&row_sign)
            .map(|(c, &s)| match (c.relation, s < 0.0) {
                (Relation::Le, true) => Relation::Ge,
                (Relation::Ge, true) => Relation::Le,
                (rel, _) => rel,
            })
            .collect();

        let num_slack = relations.iter().filter(|r| **r != Relation::Eq).count();
        let num_art = relations.iter().filter(|r| **r != Relation::Le).count();
        let first_slack = col_source.len();
        let first_artificial = first_slack + num_slack;
        let cols = first_artificial + num_art;
        col_source.resize(cols, None);
        std_cost.resize(cols, 0.0);

        let stride = cols + 1;
        let mut data = vec![0.0; m * stride];
        let mut basis = vec![0; m];
        let (mut next_slack, mut next_art) = (first_slack, first_artificial);
        let mut max_rhs_seen: f64 = 0.0;
        for (i, (con, rel)) in prob.constraints.iter().zip(&relations).enumerate() {
            let s = row_sign[i];
            let row = &mut data[i * stride..(i + 1) * stride];
            for (j, cols) in var_cols.iter().enumerate() {
                for &(c, sign) in cols {
                    row[c] = s * sign * con.coeffs[j];
                }
            }
            row[cols] = s * con.rhs;
            max_rhs_seen = max_rhs_seen.max(row[cols]);
            match rel {
                Relation::Le => {
                    row[next_slack] = 1.0;
                    basis[i] = next_slack;
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -1.0;
                    next_slack += 1;
                    row[next_art] = 1.0;
                    basis[i] = next_art;
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = 1.0;
                    basis[i] = next_art;
                    next_art += 1;
                }
            }
        }

        Tableau {
            rows: m,
            cols,
            original: data.clone(),
            data,
            initial_basis: basis.clone(),
            basis,
            reduced: vec![0.0; cols],
            z: 0.0,
            std_cost,
            col_source,
            first_artificial,
            row_sign,
            iterations: 0,
            max_rhs_seen,
        }
    }

    fn row(&self, r: usize) -> &[f64] {
        let stride = self.cols + 1;
        &self.data[r * stride..(r + 1) * stride]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.row(r)[self.cols]
    }

    /// Installs a cost vector and prices out the current basis.
    fn set_costs(&mut self, cost: &[f64]) {
        self.reduced.copy_from_slice(cost);
        self.z = 0.0;
        for r in 0..self.rows {
            let cb = cost[self.basis[r]];
            if cb == 0.0 {
                continue;
            }
            let stride = self.cols + 1;
            let row = &self.data[r * stride..(r + 1) * stride];
            for (d, a) in self.reduced.iter_mut().zip(row) {
                *d -= cb * a;
            }
            self.z += cb * row[self.cols];
        }
    }

    /// Recomputes `B^-1 [A | b]` for the current basis from the original
    /// data by Gauss-Jordan elimination, discarding accumulated round-off.
    /// Leaves the tableau untouched if the basis matrix looks singular.
    fn reinvert(&mut self, cost: &[f64]) {
        let (m, stride) = (self.rows, self.cols + 1);
        if m == 0 {
            return;
        }
        let width = m + stride;
        let mut work = vec![0.0; m * width];
        for r in 0..m {
            let orig = &self.original[r * stride..(r + 1) * stride];
            for (k, &b) in self.basis.iter().enumerate() {
                work[r * width + k] = orig[b];
            }
            work[r * width + m..(r + 1) * width].copy_from_slice(orig);
        }
        for col in 0..m {
            let pivot = (col..m)
                .max_by(|&i, &j| {
                    work[i * width + col]
                        .abs()
                        .total_cmp(&work[j * width + col].abs())
                })
                .unwrap();
            if work[pivot * width + col].abs() < 1e-12 {
                return;
            }
            if pivot != col {
                for j in 0..width {
                    work.swap(pivot * width + j, col * width + j);
                }
            }
            let inv = 1.0 / work[col * width + col];
            for v in &mut work[col * width..(col + 1) * width] {
                *v *= inv;
            }
            let prow = work[col * width..(col + 1) * width].to_vec();
            for r in (0..m).filter(|&r| r != col) {
                let f = work[r * width + col];
                if f != 0.0 {
                    for (v, p) in work[r * width..(r + 1) * width].iter_mut().zip(&prow) {
                        *v -= f * p;
                    }
                }
            }
        }
        // Row k of the reduced system belongs to basis[k]; basic columns are
        // unit vectors up to round-off and are stored exactly.
        for k in 0..m {
            self.data[k * stride..(k + 1) * stride]
                .copy_from_slice(&work[k * width + m..(k + 1) * width]);
        }
        for (k, &b) in self.basis.iter().enumerate() {
            for r in 0..m {
                self.data[r * stride + b] = if r == k { 1.0 } else { 0.0 };
            }
        }
        self.set_costs(cost);
    }

    fn objective_value(&self) -> f64 {
        self.z
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let stride = self.cols + 1;
        let (before, rest) = self.data.split_at_mut(r * stride);
        let (prow, after) = rest.split_at_mut(stride);
        let inv = 1.0 / prow[c];
        for v in prow.iter_mut() {
            *v *= inv;
        }
        prow[c] = 1.0;
        let eliminate = |row: &mut [f64]| {
            let f = row[c];
            if f != 0.0 {
                for (v, p) in row.iter_mut().zip(prow.iter()) {
                    *v -= f * p;
                }
                row[c] = 0.0;
            }
        };
        before.chunks_exact_mut(stride).for_each(eliminate);
        after.chunks_exact_mut(stride).for_each(eliminate);

        let f = self.reduced[c];
        if f != 0.0 {
            for (d, p) in self.reduced.iter_mut().zip(prow.iter()) {
                *d -= f * p;
            }
            self.reduced[c] = 0.0;
            self.z += f * prow[self.cols];
        }
        self.basis[r] = c;
    }

    fn entering(&self, limit: usize, rule: PivotRule) -> Option<usize> {
        let candidates = self.reduced[..limit]
            .iter()
            .enumerate()
            .filter(|(_, &d)| d < -COST_TOL);
        // Ties resolve to the lowest index.
        let best = |scores: &mut dyn Iterator<Item = (usize, f64)>| {
            scores
                .fold(None, |best: Option<(usize, f64)>, (j, v)| match best {
                    Some((_, bv)) if bv >= v => best,
                    _ => Some((j, v)),
                })
                .map(|(j, _)| j)
        };
        match rule {
            PivotRule::Bland => candidates.map(|(j, _)| j).next(),
            PivotRule::DantzigThenBland => best(&mut candidates.map(|(j, &d)| (j, -d))),
            PivotRule::SteepestEdge => {
                let mut norms = vec![1.0; limit];
                for r in 0..self.rows {
                    for (n, a) in norms.iter_mut().zip(&self.row(r)[..limit]) {
                        *n += a * a;
                    }
                }
                best(&mut candidates.map(|(j, &d)| (j, d * d / norms[j])))
            }
        }
    }

    /// Harris two-pass ratio test: among rows whose ratio is within the
    /// feasibility tolerance of the minimum, take the largest pivot element;
    /// exact ties go to the lowest basic variable index. Under Bland's rule
    /// the row with the lowest basic index among the minimum ratios is taken
    /// instead, which is what rules out cycling.
    fn leaving(&self, c: usize, bland: bool) -> Option<usize> {
        let ratio = |r: usize| self.rhs(r).max(0.0) / self.row(r)[c];
        let eligible = || (0..self.rows).filter(move |&r| self.row(r)[c] > PIVOT_TOL);
        if bland {
            let min = eligible().map(ratio).fold(f64::INFINITY, f64::min);
            return eligible()
                .filter(|&r| ratio(r) <= min)
                .min_by_key(|&r| self.basis[r]);
        }
        let bound = eligible()
            .map(|r| (self.rhs(r).max(0.0) + FEAS_TOL) / self.row(r)[c])
            .fold(f64::INFINITY, f64::min);
        let mut best: Option<(usize, f64)> = None;
        for r in eligible().filter(|&r| ratio(r) <= bound) {
            let a = self.row(r)[c];
            best = match best {
                Some((br, ba)) if ba > a || (ba == a && self.basis[br] < self.basis[r]) => {
                    Some((br, ba))
                }
                _ => Some((r, a)),
            };
        }
        best.map(|(r, _)| r)
    }

    fn run(
        &mut self,
        max_iters: usize,
        rule: PivotRule,
        ban_artificials: bool,
        cost: &[f64],
    ) -> Outcome {
        let limit = if ban_artificials {
            self.first_artificial
        } else {
            self.cols
        };
        let mut degenerate = 0;
        loop {
            let rule = if degenerate >= DEGENERATE_RUN {
                PivotRule::Bland
            } else {
                rule
            };
            let bland = rule == PivotRule::Bland;
            let Some(c) = self.entering(limit, rule) else {
                return Outcome::Optimal;
            };
            let Some(r) = self.leaving(c, bland) else {
                return Outcome::Unbounded;
            };
            if self.iterations >= max_iters {
                return Outcome::IterationLimit;
            }
            if self.rhs(r) <= PIVOT_TOL {
                degenerate += 1;
            } else {
                degenerate = 0;
            }
            self.pivot(r, c);
            self.iterations += 1;
            if self.iterations.is_multiple_of(REINVERT_EVERY) {
                self.reinvert(cost);
            }
        }
    }

    fn finish(&self, prob: &LpProblem, status: LpStatus) -> LpResult {
        let mut solution = vec![0.0; prob.num_vars()];
        for r in 0..self.rows {
            if let Some((j, sign)) = self.col_source[self.basis[r]] {
                solution[j] += sign * self.rhs(r);
            }
        }
        let optimal = status == LpStatus::Optimal;
        // Reduced cost of the starting identity column i is
        // cost_i - w_i, and every starting column has zero phase-2 cost.
        let duals = if optimal {
            (0..self.rows)
                .map(|i| -self.reduced[self.initial_basis[i]] * self.row_sign[i])
                .collect()
        } else {
            vec![f64::NAN; self.rows]
        };
        LpResult {
            status,
            value: if optimal {
                prob.objective_value(&solution)
            } else {
                f64::NAN
            },
            solution,
            duals,
            iterations: self.iterations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Bound::*;
    use Relation::*;

    fn solve(prob: &LpProblem) -> LpResult {
        simplex_solve(prob, 10_000).unwrap()
    }

    #[test]
    fn single_lower_bound() {
        let mut p = LpProblem::new(vec![1.0], vec![Free]);
        p.add_constraint(vec![1.0], Ge, 3.0);
        let r = solve(&p);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.value - 3.0).abs() < 1e-12);
        assert!((r.duals[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_corner() {
        let mut p = LpProblem::new(vec![-1.0, -1.0], vec![NonNegative, NonNegative]);
        p.add_constraint(vec![1.0, 1.0], Le, 1.0);
        let r = solve(&p);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.value + 1.0).abs() < 1e-12);
        assert!((r.duals[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible() {
        let mut p = LpProblem::new(vec![1.0], vec![Free]);
        p.add_constraint(vec![1.0], Ge, 1.0);
        p.add_constraint(vec![1.0], Le, 0.0);
        assert_eq!(solve(&p).status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded() {
        let mut p = LpProblem::new(vec![-1.0, 0.0], vec![NonNegative, Free]);
        p.add_constraint(vec![1.0, -1.0], Le, 1.0);
        assert_eq!(solve(&p).status, LpStatus::Unbounded);
    }

    #[test]
    fn no_constraints() {
        let p = LpProblem::new(vec![2.0, 0.0], vec![NonNegative, Free]);
        let r = solve(&p);
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value, 0.0);
        let p = LpProblem::new(vec![1.0], vec![Free]);
        assert_eq!(solve(&p).status, LpStatus::Unbounded);
    }

    #[test]
    fn negative_rhs_and_equalities() {
        // min x + 2y  s.t.  -x - y <= -4,  x - y = 1,  x, y >= 0  ->  x = 2.5, y = 1.5.
        let mut p = LpProblem::new(vec![1.0, 2.0], vec![NonNegative, NonNegative]);
        p.add_constraint(vec![-1.0, -1.0], Le, -4.0);
        p.add_constraint(vec![1.0, -1.0], Eq, 1.0);
        let r = solve(&p);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.value - 5.5).abs() < 1e-12);
        assert!((r.solution[0] - 2.5).abs() < 1e-12 && (r.solution[1] - 1.5).abs() < 1e-12);
        // Strong duality: b.y equals the optimum.
        let by = -4.0 * r.duals[0] + 1.0 * r.duals[1];
        assert!((by - r.value).abs() < 1e-12);
        assert!(r.duals[0] <= 1e-12);
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::new(vec![1.0, 1.0], vec![NonNegative, NonNegative]);
        p.add_constraint(vec![1.0, 1.0], Eq, 2.0);
        p.add_constraint(vec![2.0, 2.0], Eq, 4.0);
        p.add_constraint(vec![1.0, 0.0], Ge, 0.5);
        let r = solve(&p);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((r.value - 2.0).abs() < 1e-12);
        assert!(p.max_violation(&r.solution) < 1e-12);
    }

    #[test]
    fn iteration_limit() {
        let mut p = LpProblem::new(vec![-1.0, -1.0], vec![NonNegative, NonNegative]);
        p.add_constraint(vec![1.0, 0.0], Le, 1.0);
        p.add_constraint(vec![0.0, 1.0], Le, 1.0);
        let r = simplex_solve(&p, 1).unwrap();
        assert_eq!(r.status, LpStatus::IterationLimit);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn malformed() {
        let mut p = LpProblem::new(vec![1.0], vec![Free]);
        p.add_constraint(vec![1.0, 2.0], Le, 1.0);
        assert!(matches!(
            simplex_solve(&p, 10),
            Err(Error::MalformedProblem(_))
        ));
        let p = LpProblem::new(vec![f64::NAN], vec![Free]);
        assert!(matches!(
            simplex_solve(&p, 10),
            Err(Error::MalformedProblem(_))
        ));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut p = LpProblem::new(vec![-0.75, 150.0, -0.02, 6.0], vec![NonNegative; 4]);
        p.add_constraint(vec![0.25, -60.0, -0.04, 9.0], Le, 0.0);
        p.add_constraint(vec![0.5, -90.0, -0.02, 3.0], Le, 0.0);
        p.add_constraint(vec![0.0, 0.0, 1.0, 0.0], Le, 1.0);
        for rule in [
            PivotRule::Bland,
            PivotRule::DantzigThenBland,
            PivotRule::SteepestEdge,
        ] {
            let r = simplex_solve_with(&p, 1000, rule).unwrap();
            assert_eq!(r.status, LpStatus::Optimal);
            assert!((r.value + 0.05).abs() < 1e-12, "{rule:?}: {}", r.value);
        }
    }

    #[test]
    fn deterministic() {
        let mut p = LpProblem::new(vec![1.0, -2.0, 0.5], vec![Free, NonNegative, NonNegative]);
        p.add_constraint(vec![1.0, 1.0, 1.0], Eq, 1.0);
        p.add_constraint(vec![1.0, -1.0, 0.3], Ge, -0.2);
        p.add_constraint(vec![0.0, 1.0, -1.0], Le, 0.7);
        let a = solve(&p);
        let b = solve(&p);
        assert_eq!(a.iterations, b.iterations);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.solution, b.solution);
    }
}

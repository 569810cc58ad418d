//! Exact values of the Turán constant `A(p/q)` and the interpolating cosine
//! combination `Gamma` whose leading coefficient encodes it.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::cutoff::RationalCutoff;
use crate::error::{Error, Result};
use crate::linalg::{residual_inf, solve_dense};

/// The families of cutoffs for which `A(p/q)` has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TuranBranch {
    /// `p = 1`: `A = 1/q`.
    UnitNumerator,
    /// `p = 2`, `q` odd: `A = (1 + cos(pi/q)) / (q cos(pi/q))`.
    NumeratorTwo,
    /// `p = 3`, `q >= 7`, `3 !| q`, via `r0 = floor(q/3)`.
    NumeratorThree,
    /// `q = 2p + 1`: `A = cos(pi/q) / (1 + cos(pi/q))`.
    NearHalf,
}

impl TuranBranch {
    fn value(self, p: usize, q: usize) -> f64 {
        let qf = q as f64;
        match self {
            TuranBranch::UnitNumerator => 1.0 / qf,
            TuranBranch::NumeratorTwo => {
                let c = (PI / qf).cos();
                (1.0 + c) / (qf * c)
            }
            TuranBranch::NumeratorThree => {
                let r0 = (q / 3) as f64;
                let c1 = (TAU * r0 / qf).cos();
                let c2 = (TAU * (r0 + 1.0) / qf).cos();
                (1.0 + (1.0 - 2.0 * (c1 + c2)) / (1.0 + 2.0 * c1 * c2)) / qf
            }
            TuranBranch::NearHalf => {
                debug_assert_eq!(q, 2 * p + 1);
                let c = (PI / qf).cos();
                c / (1.0 + c)
            }
        }
    }
}

/// Every closed-form branch that covers `h`, in order of preference.
pub fn applicable_branches(h: RationalCutoff) -> Vec<TuranBranch> {
    let (p, q) = (h.p(), h.q());
    let mut out = Vec::new();
    match p {
        1 => out.push(TuranBranch::UnitNumerator),
        // A valid cutoff with p = 2 has q odd and q >= 5.
        2 => out.push(TuranBranch::NumeratorTwo),
        // A valid cutoff with p = 3 has 3 !| q and q >= 7.
        3 => out.push(TuranBranch::NumeratorThree),
        _ => {}
    }
    if q == 2 * p + 1 {
        out.push(TuranBranch::NearHalf);
    }
    out
}

/// `(branch, value)` for each applicable branch. Overlapping branches must agree.
pub fn branch_values(h: RationalCutoff) -> Vec<(TuranBranch, f64)> {
    applicable_branches(h)
        .into_iter()
        .map(|b| (b, b.value(h.p(), h.q())))
        .collect()
}

/// `A(p/q)` from the first applicable closed form.
pub fn turan_value(h: RationalCutoff) -> Result<f64> {
    branch_values(h)
        .first()
        .map(|&(_, v)| v)
        .ok_or(Error::UnsupportedCase { p: h.p(), q: h.q() })
}

/// Coefficients of `Gamma(nu) = g0 + sum_i g_{i+1} cos(2 pi shift_i nu / q)`
/// with `Gamma(0) = 1` and `Gamma(j) = 0` for `j = 1..p-1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaSolution {
    pub p: usize,
    pub q: usize,
    pub r0: usize,
    pub shifts: Vec<usize>,
    pub gammas: Vec<f64>,
    /// `1 / (q * g0)`.
    #[serde(rename = "A")]
    pub a_value: f64,
}

impl GammaSolution {
    /// `Gamma(nu)` at an integer `nu`.
    pub fn gamma_at(&self, nu: i64) -> f64 {
        let qf = self.q as f64;
        let mut acc = self.gammas[0];
        for (&r, &g) in self.shifts.iter().zip(&self.gammas[1..]) {
            // r * nu mod q keeps the cosine argument in [0, 2 pi).
            let phase = (r as i64 * nu).rem_euclid(self.q as i64) as f64;
            acc += g * (TAU * phase / qf).cos();
        }
        acc
    }

    pub fn gamma0(&self) -> f64 {
        self.gammas[0]
    }
}

/// Solves for the `Gamma` coefficients. For `p = 3` the shifts are
/// `(r0, r0 + 1)` with `r0 = floor(q/3)`; for `p = 2` a single shift
/// `r0 = (q - 1)/2` is used, for which `cos(2 pi r0 / q) = -cos(pi / q)`.
pub fn solve_gamma(h: RationalCutoff) -> Result<GammaSolution> {
    let (p, q) = (h.p(), h.q());
    let qf = q as f64;
    let (r0, shifts) = match p {
        2 => {
            let r0 = (q - 1) / 2;
            (r0, vec![r0])
        }
        3 => {
            let r0 = q / 3;
            (r0, vec![r0, r0 + 1])
        }
        _ => return Err(Error::UnsupportedCase { p, q }),
    };

    // Row j encodes Gamma(j): columns are 1, cos(2 pi r j / q) per shift.
    let n = p;
    let mut matrix = vec![0.0; n * n];
    for j in 0..n {
        matrix[j * n] = 1.0;
        for (i, &r) in shifts.iter().enumerate() {
            let phase = (r * j % q) as f64;
            matrix[j * n + i + 1] = (TAU * phase / qf).cos();
        }
    }
    let mut rhs = vec![0.0; n];
    rhs[0] = 1.0;

    let gammas = solve_dense(&matrix, &rhs).ok_or(Error::SingularSystem {
        residual: f64::INFINITY,
    })?;
    let residual = residual_inf(&matrix, &gammas, &rhs);
    if residual.is_nan() || residual > 1e-8 {
        return Err(Error::SingularSystem { residual });
    }
    if let Some((index, &value)) = gammas.iter().enumerate().find(|(_, &g)| g <= 1e-12) {
        return Err(Error::NonPositiveGamma { index, value });
    }
    let a_value = 1.0 / (qf * gammas[0]);
    Ok(GammaSolution {
        p,
        q,
        r0,
        shifts,
        gammas,
        a_value,
    })
}

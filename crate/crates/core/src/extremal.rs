//! The extremal polynomial `T*` built from shifted Fejér kernels, and
//! membership checks against a frequency set.

use serde::Serialize;

use crate::closed_forms::{solve_gamma, GammaSolution};
use crate::cospoly::CosPoly;
use crate::cutoff::RationalCutoff;
use crate::error::{Error, Result};
use crate::kernels::{fejer, fejer_closed};
use crate::lp::{delta_grid_lp, lipschitz_certify, taylor_certify, DeltaLp};
use crate::support::SupportSet;

/// Coefficients with magnitude at or below this are treated as exact zeros.
pub const SNAP_TOL: f64 = 1e-12;

/// `Gamma` data for `h`, or `None` when `p = 1` (plain Fejér kernel).
fn gamma_for(h: RationalCutoff) -> Result<Option<GammaSolution>> {
    match h.p() {
        1 => Ok(None),
        2 | 3 => solve_gamma(h).map(Some),
        _ => Err(Error::UnsupportedCase { p: h.p(), q: h.q() }),
    }
}

/// Leading `Gamma` coefficient, with `1/q` standing in for `p = 1` so that
/// `t_0 = 1/(q g0)` holds on every branch.
pub fn extremal_gamma0(h: RationalCutoff) -> Result<f64> {
    Ok(gamma_for(h)?.map_or(1.0 / h.q() as f64, |g| g.gamma0()))
}

/// `T*` in coefficient form, `t_v = Gamma(v) F_v / g0` for `v = 0..q-1`.
pub fn build_extremal(h: RationalCutoff) -> Result<CosPoly> {
    let kernel = fejer(h.q());
    let Some(gamma) = gamma_for(h)? else {
        return Ok(kernel);
    };
    let g0 = gamma.gamma0();
    let coeffs = kernel
        .coeffs()
        .iter()
        .enumerate()
        .map(|(v, &f)| gamma.gamma_at(v as i64) * f / g0)
        .collect();
    Ok(CosPoly::new(coeffs).snapped(SNAP_TOL))
}

/// `T*(x)` as `F(x) + sum_i g_i/(2 g0) (F(x + r_i/q) + F(x - r_i/q))`
/// using the closed form of the Fejér kernel.
pub fn shifted_kernel_eval(h: RationalCutoff, x: f64) -> Result<f64> {
    let q = h.q();
    let mut acc = fejer_closed(q, x);
    if let Some(gamma) = gamma_for(h)? {
        let g0 = gamma.gamma0();
        for (&r, &g) in gamma.shifts.iter().zip(&gamma.gammas[1..]) {
            let s = r as f64 / q as f64;
            acc += g / (2.0 * g0) * (fejer_closed(q, x + s) + fejer_closed(q, x - s));
        }
    }
    Ok(acc)
}

/// Checks that the kernel shifts land on zeros of `F`, that they lie in
/// `(0, q/2)`, and that `T*(0) = 1`.
pub fn verify_t_at_zero_shifts(h: RationalCutoff) -> Result<bool> {
    let Some(gamma) = gamma_for(h)? else {
        return Err(Error::PreconditionViolated(
            "shift check needs p = 2 or 3".into(),
        ));
    };
    let q = h.q();
    let shifts_ok = gamma
        .shifts
        .iter()
        .all(|&r| r > 0 && 2 * r < q && fejer_closed(q, r as f64 / q as f64) <= 1e-18);
    Ok(shifts_ok && (shifted_kernel_eval(h, 0.0)? - 1.0).abs() <= 1e-10)
}

/// Outcome of checking a polynomial against the three membership conditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipReport {
    pub support_ok: bool,
    pub t_at_zero: f64,
    pub t0: f64,
    pub certified_min: f64,
    /// `sum 2 pi k |t_k|`, the Lipschitz constant of `T`.
    pub lipschitz_bound: f64,
    /// `sum (2 pi k)^4 |t_k|`, used by the third-order certificate.
    pub fourth_derivative_bound: f64,
    pub grid_size: usize,
    pub member: bool,
}

impl MembershipReport {
    pub fn passes(&self) -> bool {
        self.member
    }
}

/// Checks support in `set`, `T(0) = 1` and `T >= 0`. The minimum is the
/// better of the first- and third-order grid certificates; both are sound.
pub fn verify_membership(poly: &CosPoly, set: &SupportSet, grid_size: usize) -> MembershipReport {
    let snapped = poly.clone().snapped(SNAP_TOL);
    let support_ok = snapped.support().all(|k| set.contains(k));
    let t_at_zero = poly.value_at_zero();
    let first = lipschitz_certify(poly, grid_size);
    let third = taylor_certify(poly, grid_size);
    let certified_min = first.certified_min.max(third.certified_min);
    MembershipReport {
        support_ok,
        t_at_zero,
        t0: poly.t0(),
        certified_min,
        lipschitz_bound: first.bound,
        fourth_derivative_bound: third.bound,
        grid_size,
        member: support_ok && (t_at_zero - 1.0).abs() <= 1e-9 && certified_min >= -1e-9,
    }
}

/// For `q = 2p + 1` with `p >= 4` no explicit construction is available; the
/// extremal polynomial on `{p, p+1}` is found by the grid LP instead.
pub fn numeric_near_half_extremal(h: RationalCutoff, grid: usize) -> Result<DeltaLp> {
    if h.q() != 2 * h.p() + 1 {
        return Err(Error::PreconditionViolated(format!(
            "{h} is not of the form p/(2p+1)"
        )));
    }
    delta_grid_lp(&SupportSet::block(h), grid)
}

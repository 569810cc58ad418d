//! The Fejér kernel `F_q`.

use std::f64::consts::PI;

use crate::cospoly::{reduce_period, CosPoly};

/// `F_q` in coefficient form: `t_0 = 1/q`, `t_v = (2/q)(1 - v/q)` for `v = 1..q-1`.
pub fn fejer(q: usize) -> CosPoly {
    assert!(q >= 1, "Fejér kernel needs q >= 1");
    let qf = q as f64;
    let coeffs = (0..q)
        .map(|v| {
            if v == 0 {
                1.0 / qf
            } else {
                2.0 * (qf - v as f64) / (qf * qf)
            }
        })
        .collect();
    CosPoly::new(coeffs)
}

/// `(sin(pi q x) / (q sin(pi x)))^2`, equal to 1 at the integers.
pub fn fejer_closed(q: usize, x: f64) -> f64 {
    let qf = q as f64;
    let r = reduce_period(x);
    let den = (PI * r).sin();
    if den.abs() < 1e-9 {
        // Removable singularity at integers; the quotient tends to +-1.
        return 1.0;
    }
    // sin^2 has period pi, so q*r can be reduced to [-1/2, 1/2] as well.
    let num = (PI * reduce_period(qf * r)).sin();
    let ratio = num / (qf * den);
    ratio * ratio
}

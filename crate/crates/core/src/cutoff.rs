use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational cutoff `h = p/q` with `gcd(p, q) = 1` and `1 <= p`, `2p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalCutoff {
    p: usize,
    q: usize,
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalCutoff {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || 2 * p > q {
            return Err(Error::OutOfRange { p, q });
        }
        let g = gcd(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

/// Validating constructor, same as [`RationalCutoff::new`].
pub fn make_cutoff(p: usize, q: usize) -> Result<RationalCutoff> {
    RationalCutoff::new(p, q)
}

impl fmt::Display for RationalCutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

//! Sets of admissible cosine frequencies.

use std::fmt;

use crate::cutoff::RationalCutoff;
use crate::error::{Error, Result};

/// A set of positive integer frequencies, either finite or a union of residue
/// classes `{ q*nu + k : nu >= 0, k in base }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SupportSet {
    Finite(Vec<usize>),
    Periodic { q: usize, base: Vec<usize> },
}

impl SupportSet {
    /// Builds a finite set. Elements may come in any order but must be
    /// positive and distinct.
    pub fn finite(elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptySupport);
        }
        elements.sort_unstable();
        if elements[0] == 0 {
            return Err(Error::InvalidSupport("frequency 0 is not allowed".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSupport(format!(
                "duplicate frequency {}",
                w[0]
            )));
        }
        Ok(SupportSet::Finite(elements))
    }

    /// Builds `q*Z_+ + base`. Each base element must lie in `[1, q-1]`.
    pub fn periodic(q: usize, base: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut base: Vec<usize> = base.into_iter().collect();
        if base.is_empty() {
            return Err(Error::EmptySupport);
        }
        base.sort_unstable();
        base.dedup();
        if q < 2 || base[0] == 0 || *base.last().unwrap() >= q {
            return Err(Error::InvalidSupport(format!(
                "periodic base must lie in [1, {}]",
                q.saturating_sub(1)
            )));
        }
        Ok(SupportSet::Periodic { q, base })
    }

    /// The residue block `{p, p+1, ..., q-p}`.
    pub fn block(h: RationalCutoff) -> Self {
        SupportSet::Finite((h.p()..=h.q() - h.p()).collect())
    }

    /// The periodic extension `q*Z_+ + {p, ..., q-p}` of [`SupportSet::block`].
    pub fn periodic_block(h: RationalCutoff) -> Self {
        SupportSet::Periodic {
            q: h.q(),
            base: (h.p()..=h.q() - h.p()).collect(),
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        match self {
            SupportSet::Finite(elements) => elements.binary_search(&k).is_ok(),
            SupportSet::Periodic { q, base } => k > 0 && base.binary_search(&(k % q)).is_ok(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SupportSet::Finite(_))
    }

    /// Elements of a finite set, `None` for periodic sets.
    pub fn elements(&self) -> Option<&[usize]> {
        match self {
            SupportSet::Finite(elements) => Some(elements),
            SupportSet::Periodic { .. } => None,
        }
    }

    /// All elements `<= bound`, in increasing order.
    pub fn elements_up_to(&self, bound: usize) -> Vec<usize> {
        match self {
            SupportSet::Finite(elements) => elements
                .iter()
                .copied()
                .take_while(|&k| k <= bound)
                .collect(),
            SupportSet::Periodic { q, base } => {
                let mut out = Vec::new();
                let mut offset = 0;
                while offset <= bound {
                    out.extend(base.iter().map(|&k| offset + k).take_while(|&k| k <= bound));
                    offset += q;
                }
                out
            }
        }
    }

    /// Elements divisible by `m` (the set `K^(m)`), for finite sets.
    pub fn multiples_of(&self, m: usize) -> Option<Vec<usize>> {
        self.elements()
            .map(|e| e.iter().copied().filter(|k| k % m == 0).collect())
    }

    /// True when no element of the set is divisible by `m`. Exact for
    /// periodic sets: `q*nu + k` hits a multiple of `m` iff `gcd(q, m) | k`.
    pub fn avoids_multiples_of(&self, m: usize) -> bool {
        match self {
            SupportSet::Finite(elements) => elements.iter().all(|k| k % m != 0),
            SupportSet::Periodic { q, base } => {
                let g = crate::cutoff::gcd(*q, m);
                base.iter().all(|k| k % g != 0)
            }
        }
    }

    /// Finite union of two finite sets.
    pub fn union(&self, other: &SupportSet) -> Result<SupportSet> {
        match (self.elements(), other.elements()) {
            (Some(a), Some(b)) => {
                let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
                all.sort_unstable();
                all.dedup();
                Ok(SupportSet::Finite(all))
            }
            _ => Err(Error::InvalidSupport(
                "union is only defined for finite sets".into(),
            )),
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            SupportSet::Finite(e) => write!(f, "{{{}}}", join(e)),
            SupportSet::Periodic { q, base } => write!(f, "{}Z+ + {{{}}}", q, join(base)),
        }
    }
}

/// `{k in K : k <= bound}` as a finite set.
pub fn truncate_support(set: &SupportSet, bound: usize) -> Result<SupportSet> {
    let elements = set.elements_up_to(bound);
    if elements.is_empty() {
        return Err(Error::EmptyTruncation { bound });
    }
    Ok(SupportSet::Finite(elements))
}

/// `{m*k : k in K}`.
pub fn dilate_support(set: &SupportSet, m: usize) -> Result<SupportSet> {
    match set.elements() {
        Some(e) if m >= 1 => Ok(SupportSet::Finite(e.iter().map(|k| k * m).collect())),
        Some(_) => Err(Error::InvalidSupport(
            "dilation factor must be positive".into(),
        )),
        None => Err(Error::InvalidSupport(
            "dilation is only defined for finite sets".into(),
        )),
    }
}

/// True iff every element of `inner` that is `<= bound` belongs to `outer`.
pub fn is_subset(inner: &SupportSet, outer: &SupportSet, bound: usize) -> bool {
    inner
        .elements_up_to(bound)
        .into_iter()
        .all(|k| outer.contains(k))
}

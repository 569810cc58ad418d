//! Even 1-periodic trigonometric polynomials stored by cosine coefficients.

use std::f64::consts::TAU;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `T(x) = t_0 + sum_{k=1}^{H} t_k cos(2 pi k x)` with `coeffs = [t_0, ..., t_H]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CosPoly {
    coeffs: Vec<f64>,
}

/// Reduces `x` to `[-1/2, 1/2]`; exact for all finite `x`.
pub(crate) fn reduce_period(x: f64) -> f64 {
    x - x.round()
}

impl CosPoly {
    /// An empty coefficient vector is read as the zero polynomial.
    pub fn new(coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            return Self { coeffs: vec![0.0] };
        }
        Self { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// Dense polynomial from a constant term and `(frequency, coefficient)` pairs.
    pub fn from_terms(t0: f64, terms: impl IntoIterator<Item = (usize, f64)>) -> Self {
        let mut coeffs = vec![t0];
        for (k, t) in terms {
            if k >= coeffs.len() {
                coeffs.resize(k + 1, 0.0);
            }
            coeffs[k] += t;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Index of the last stored coefficient.
    pub fn storage_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `k` with `t_k != 0`; zero for constants and the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&t| t != 0.0).unwrap_or(0)
    }

    pub fn t0(&self) -> f64 {
        self.coeffs[0]
    }

    /// `T(0)`, the plain sum of coefficients.
    pub fn value_at_zero(&self) -> f64 {
        self.coeffs.iter().sum()
    }

    /// Frequencies `k >= 1` carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &t)| t != 0.0)
            .map(|(k, _)| k)
    }

    /// Sets coefficients with `|t_k| <= tol` to exactly zero.
    pub fn snapped(mut self, tol: f64) -> Self {
        for t in &mut self.coeffs {
            if t.abs() <= tol {
                *t = 0.0;
            }
        }
        self
    }

    pub fn eval(&self, x: f64) -> f64 {
        let r = reduce_period(x);
        let mut acc = self.coeffs[0];
        for (k, &t) in self.coeffs.iter().enumerate().skip(1) {
            if t != 0.0 {
                acc += t * (TAU * (k as f64) * r).cos();
            }
        }
        acc
    }

    /// `[T(x), T'(x), T''(x), T'''(x)]`.
    pub fn eval_with_derivatives(&self, x: f64) -> [f64; 4] {
        let r = reduce_period(x);
        let mut out = [self.coeffs[0], 0.0, 0.0, 0.0];
        for (k, &t) in self.coeffs.iter().enumerate().skip(1) {
            if t == 0.0 {
                continue;
            }
            let w = TAU * k as f64;
            let (s, c) = (w * r).sin_cos();
            out[0] += t * c;
            out[1] -= t * w * s;
            out[2] -= t * w * w * c;
            out[3] += t * w * w * w * s;
        }
        out
    }

    /// `sum_k (2 pi k)^order |t_k|`, a global bound on `|T^(order)|`.
    pub fn derivative_bound(&self, order: i32) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &t)| (TAU * k as f64).powi(order) * t.abs())
            .sum()
    }
}

/// Evaluates `T(x)`.
pub fn eval_cospoly(poly: &CosPoly, x: f64) -> f64 {
    poly.eval(x)
}

#[derive(Serialize, Deserialize)]
struct CosPolyJson {
    degree: usize,
    coeffs: Vec<f64>,
}

impl Serialize for CosPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CosPolyJson {
            degree: self.storage_degree(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CosPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CosPolyJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.degree + 1 {
            return Err(serde::de::Error::custom(format!(
                "degree {} needs {} coefficients, found {}",
                raw.degree,
                raw.degree + 1,
                raw.coeffs.len()
            )));
        }
        if raw.coeffs.iter().any(|t| !t.is_finite()) {
            return Err(serde::de::Error::custom("coefficients must be finite"));
        }
        Ok(CosPoly { coeffs: raw.coeffs })
    }
}

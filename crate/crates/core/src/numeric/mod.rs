//! Function-level transforms in floating point.

mod accel;
mod fractional;
mod gamma;
mod quadrature;
mod source;
mod transforms;

pub use accel::{levin_u, Accelerated};
pub use fractional::{
    fractional_derivative, fractional_derivative_iterated, fractional_difference, zeta_formal_series, ZetaSeries,
};
pub use gamma::{gamma, incomplete_gamma_upper, ln_gamma};
pub use quadrature::{exp_sinh, gauss_legendre, laguerre_rule, legendre_rule, mellin, Rule};
pub use source::{Builtin, Callable, Provider, SeriesSource, Term};
pub use transforms::{fft_fn, ifft_fn, irft_fn, rft_fn, rft_fn_damped};

use crate::error::{Error, Result};

/// When a series evaluation may stop before `truncation` terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailPolicy {
    /// Always sum exactly `truncation` terms.
    FixedN,
    /// Stop once three consecutive terms fall below `epsilon * |partial sum|`.
    StopWhenTermBelow(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    pub truncation: usize,
    pub tolerance: f64,
    pub tail_policy: TailPolicy,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            truncation: 64,
            tolerance: 1e-10,
            tail_policy: TailPolicy::StopWhenTermBelow(f64::EPSILON),
        }
    }
}

impl NumericConfig {
    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation = n;
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.truncation == 0 {
            return Err(Error::Domain("truncation must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureScheme {
    /// Generalized Gauss–Laguerre only; disagreement under node doubling is an error.
    GaussLaguerre,
    /// Generalized Gauss–Laguerre, switching to exp-sinh quadrature when node
    /// doubling changes the result.
    AdaptiveFallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub nodes: usize,
    pub scheme: QuadratureScheme,
    pub tolerance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { nodes: 80, scheme: QuadratureScheme::AdaptiveFallback, tolerance: 1e-10 }
    }
}

/// A numeric result with its error estimate and the number of terms consumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub terms: usize,
}

impl Estimate {
    pub(crate) fn exact(value: f64, terms: usize) -> Self {
        Estimate { value, error: 0.0, terms }
    }
}

/// Sums `term(0), term(1), ...` under the configured tail policy, falling back
/// to Levin acceleration when the policy is not met within `truncation` terms.
pub(crate) fn sum_series(mut term: impl FnMut(usize) -> f64, cfg: &NumericConfig) -> Result<Estimate> {
    cfg.validate()?;
    let n_max = cfg.truncation;
    let mut terms = Vec::with_capacity(n_max);
    let mut partial = 0.0f64;
    let mut small_run = 0;
    for n in 0..n_max {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::NonConvergence { terms: n, estimate: f64::INFINITY });
        }
        partial += t;
        terms.push(t);
        if let TailPolicy::StopWhenTermBelow(eps) = cfg.tail_policy {
            if t.abs() <= eps * partial.abs() {
                small_run += 1;
            } else {
                small_run = 0;
            }
            if small_run >= 3 {
                let next = term(n + 1);
                return Ok(Estimate { value: partial, error: next.abs(), terms: n + 1 });
            }
        }
    }
    if cfg.tail_policy == TailPolicy::FixedN {
        return Ok(Estimate { value: partial, error: term(n_max).abs(), terms: n_max });
    }
    if terms.iter().all(|t| *t == 0.0) {
        return Ok(Estimate::exact(0.0, n_max));
    }
    match levin_u(&terms) {
        Some(acc) if acc.error <= cfg.tolerance * acc.value.abs().max(1.0) => {
            Ok(Estimate { value: acc.value, error: acc.error, terms: n_max })
        }
        Some(acc) => Err(Error::NonConvergence { terms: n_max, estimate: acc.error }),
        None => Err(Error::NonConvergence { terms: n_max, estimate: terms.last().map_or(0.0, |t| t.abs()) }),
    }
}

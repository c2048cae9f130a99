use num_traits::Zero;

use super::gamma::{gamma, ln_factorial};
use super::quadrature::{exp_sinh, laguerre_rule, mellin};
use super::source::{SeriesSource, Term};
use super::{sum_series, Estimate, NumericConfig, QuadratureScheme, QuadratureSpec};
use crate::combinatorics::falling_factorial;
use crate::error::{Error, Result};
use crate::scalar::{int, to_f64, Rational};

fn signed_exp(ln: f64, negative: bool) -> f64 {
    let m = ln.exp();
    if negative {
        -m
    } else {
        m
    }
}

/// Inverse falling transform `e^{-x} sum f(n) x^n / n!` from integer samples.
///
/// Terms are formed in log space with the `e^{-x}` factor folded in, so
/// fast-growing samples such as `n!` do not overflow.
pub fn ifft_fn(src: &SeriesSource, x: f64, cfg: &NumericConfig) -> Result<Estimate> {
    let sample: Box<dyn Fn(u64) -> Term + '_> = match src {
        SeriesSource::IntegerSamples(p) => Box::new(move |n| p(n)),
        SeriesSource::Callable(f) => Box::new(move |n| Term::Float(f(n as f64))),
        SeriesSource::Taylor { .. } => return Err(Error::WrongSourceKind("integer_samples")),
    };
    if x == 0.0 {
        return Ok(Estimate::exact(sample(0).to_f64(), 1));
    }
    let ln_x = x.abs().ln();
    sum_series(
        |n| match sample(n as u64).log_parts() {
            None => 0.0,
            Some((ln_f, negative)) => {
                let negative = negative ^ (x < 0.0 && n % 2 == 1);
                signed_exp(ln_f + n as f64 * ln_x - ln_factorial(n) - x, negative)
            }
        },
        cfg,
    )
}

/// Inverse rising transform `e^x sum (-1)^n f(-n) x^n / n!` from a callable.
pub fn irft_fn(src: &SeriesSource, x: f64, cfg: &NumericConfig) -> Result<Estimate> {
    let SeriesSource::Callable(f) = src else {
        return Err(Error::WrongSourceKind("callable"));
    };
    if x == 0.0 {
        return Ok(Estimate::exact(f(0.0), 1));
    }
    let ln_x = x.abs().ln();
    sum_series(
        |n| {
            let v = f(-(n as f64));
            if v == 0.0 {
                return 0.0;
            }
            let negative = (v < 0.0) ^ (n % 2 == 1) ^ (x < 0.0 && n % 2 == 1);
            signed_exp(v.abs().ln() + n as f64 * ln_x - ln_factorial(n) + x, negative)
        },
        cfg,
    )
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// Rising transform `1/Γ(s) ∫_0^∞ f(t) t^{s-1} e^{-t} dt`.
///
/// Uses the generalized Gauss–Laguerre rule for the weight `t^{s-1} e^{-t}`
/// and compares against the rule with twice the nodes. Under
/// [`QuadratureScheme::AdaptiveFallback`] a disagreement switches to exp-sinh
/// quadrature; under [`QuadratureScheme::GaussLaguerre`] it is an error.
pub fn rft_fn(f: &(dyn Fn(f64) -> f64 + Sync), s: f64, quad: &QuadratureSpec) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("rising transform needs s > 0, got {s}")));
    }
    let alpha = s - 1.0;
    let coarse = laguerre_rule(quad.nodes, alpha)?.apply(f);
    let fine = laguerre_rule(2 * quad.nodes, alpha)?.apply(f);
    if coarse.is_finite() && fine.is_finite() && close(coarse, fine, quad.tolerance) {
        return Ok(coarse);
    }
    match quad.scheme {
        QuadratureScheme::GaussLaguerre => Err(Error::Quadrature(format!(
            "{} and {} node rules disagree: {coarse:e} vs {fine:e}",
            quad.nodes,
            2 * quad.nodes
        ))),
        QuadratureScheme::AdaptiveFallback => {
            let integral = exp_sinh(f, |ln_t, t| alpha * ln_t - t, 1e-13)?;
            Ok(integral / gamma(s)?)
        }
    }
}

/// Rising transform of `f` given `g(t) = f(t) e^{-t}` directly, as
/// `M(g)(s) / Γ(s)`. Useful when `f` itself overflows, e.g. `f = e^t / (1 + t)`.
pub fn rft_fn_damped(g: &(dyn Fn(f64) -> f64 + Sync), s: f64) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("rising transform needs s > 0, got {s}")));
    }
    Ok(mellin(g, s, 1e-13)? / gamma(s)?)
}

pub(crate) fn nonnegative_integer(s: f64) -> Option<u64> {
    (s >= 0.0 && s == s.floor() && s < 1e9).then_some(s as u64)
}

/// Falling transform `sum binom(s, n) n! a_n` from Taylor coefficients.
///
/// At a nonnegative integer `s` the sum is finite and evaluated exactly when
/// the coefficients are exact.
pub fn fft_fn(src: &SeriesSource, s: f64, cfg: &NumericConfig) -> Result<Estimate> {
    let SeriesSource::Taylor { coeff, .. } = src else {
        return Err(Error::WrongSourceKind("taylor"));
    };
    if let Some(m) = nonnegative_integer(s) {
        let terms: Vec<Term> = (0..=m).map(|n| coeff(n)).collect();
        if terms.iter().all(|t| matches!(t, Term::Exact(_))) {
            let m_q = int(m as i64);
            let total = terms.iter().enumerate().fold(Rational::zero(), |acc, (n, t)| {
                let Term::Exact(a) = t else { unreachable!() };
                acc + falling_factorial(&m_q, n as i64).expect("nonnegative index") * a
            });
            return Ok(Estimate::exact(to_f64(&total), terms.len()));
        }
        let total = terms.iter().enumerate().map(|(n, t)| {
            let binom = (0..n).fold(1.0, |b, j| b * (m - j as u64) as f64 / (j + 1) as f64);
            binom * t.times_factorial(n)
        });
        return Ok(Estimate::exact(total.sum(), terms.len()));
    }
    let mut binom = 1.0f64;
    let mut last = 0usize;
    sum_series(
        |n| {
            while last < n {
                binom *= (s - last as f64) / (last + 1) as f64;
                last += 1;
            }
            let a = coeff(n as u64);
            if binom == 0.0 {
                0.0
            } else {
                binom * a.times_factorial(n)
            }
        },
        cfg,
    )
}

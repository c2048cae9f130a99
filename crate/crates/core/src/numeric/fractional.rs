//! Fractional derivatives and differences through the falling transform, and
//! the formal Bernoulli series for ζ.

use num_traits::Zero;

use super::source::{SeriesSource, Term};
use super::transforms::nonnegative_integer;
use super::{sum_series, Estimate, NumericConfig};
use crate::combinatorics::{bernoulli, factorial, rising_factorial};
use crate::error::{Error, Result};
use crate::scalar::{from_f64, to_f64, Rational};

/// Leading entries `(Δ^m A)(0)` of the forward-difference table of `values`.
fn difference_column(values: Vec<Rational>) -> Vec<Rational> {
    let mut row = values;
    let mut out = Vec::with_capacity(row.len());
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

fn exact_term(t: Term) -> Result<Rational> {
    match t {
        Term::Exact(r) => Ok(r),
        other => from_f64(other.to_f64()),
    }
}

/// Newton sum `sum_j binom(s, j) seq[offset + j]`, finite at nonnegative integers.
fn newton_sum(seq: &[f64], offset: usize, s: f64, cfg: &NumericConfig) -> Result<Estimate> {
    let avail = seq.len() - offset;
    if let Some(m) = nonnegative_integer(s) {
        let m = m as usize;
        if m >= avail {
            return Err(Error::NonConvergence { terms: avail, estimate: f64::INFINITY });
        }
        let mut binom = 1.0;
        let mut total = 0.0;
        for j in 0..=m {
            total += binom * seq[offset + j];
            binom = binom * (m - j) as f64 / (j + 1) as f64;
        }
        return Ok(Estimate::exact(total, m + 1));
    }
    let local = cfg.with_truncation(cfg.truncation.min(avail));
    let mut binom = 1.0f64;
    let mut last = 0usize;
    sum_series(
        |j| {
            while last < j {
                binom *= (s - last as f64) / (last + 1) as f64;
                last += 1;
            }
            seq.get(offset + j).map_or(0.0, |v| binom * v)
        },
        &local,
    )
}

const SHIFT_TERMS: usize = 64;

/// `m! [x^m] e^{-x} f(x + t)` for `m < len`.
///
/// The difference table of `n! a_n` is built exactly, so the cancellation
/// hidden in the product with `e^{-x}` costs no precision; the shift by `t`
/// then runs in floating point.
fn damped_derivatives(coeff: &(dyn Fn(u64) -> Term + Send + Sync), t: f64, len: usize) -> Result<Vec<f64>> {
    let extra = if t == 0.0 { 0 } else { SHIFT_TERMS };
    let total = len + extra;
    let scaled: Vec<Rational> = (0..total)
        .map(|n| Ok(exact_term(coeff(n as u64))? * Rational::from_integer(factorial(n).into())))
        .collect::<Result<_>>()?;
    let g: Vec<f64> = difference_column(scaled).iter().map(to_f64).collect();
    if t == 0.0 {
        return Ok(g);
    }
    let et = t.exp();
    Ok((0..len)
        .map(|m| {
            let mut sum = 0.0;
            let mut w = 1.0;
            for k in 0..extra {
                let term = w * g[m + k];
                sum += term;
                if k > 8 && term.abs() <= f64::EPSILON * sum.abs() * 1e-2 {
                    break;
                }
                w *= t / (k + 1) as f64;
            }
            et * sum
        })
        .collect())
}

/// Applies the fractional derivatives of the given orders in sequence to the
/// Taylor source `f` and evaluates the result at `t`.
///
/// Each stage maps the sequence `D_m = m! [x^m] e^{-x} h(x + t)` of its input
/// `h` to the same sequence for `∂^s h`, by a Newton sum per entry; the last
/// stage reads off the value.
pub fn fractional_derivative_iterated(
    src: &SeriesSource,
    orders: &[f64],
    t: f64,
    cfg: &NumericConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let SeriesSource::Taylor { coeff, radius } = src else {
        return Err(Error::WrongSourceKind("taylor"));
    };
    if t.abs() >= *radius {
        return Err(Error::Domain(format!("shift {t} lies outside the source radius {radius}")));
    }
    let Some((&last, inner)) = orders.split_last() else {
        return Err(Error::Domain("at least one order is required".into()));
    };
    let n = cfg.truncation;
    let mut seq = damped_derivatives(coeff.as_ref(), t, n * orders.len())?;
    let mut worst_error = 0.0f64;
    for &s in inner {
        let next_len = seq.len() - n;
        let mut next = Vec::with_capacity(next_len);
        for m in 0..next_len {
            let est = newton_sum(&seq, m, s, cfg)?;
            worst_error = worst_error.max(est.error);
            next.push(est.value);
        }
        seq = next;
    }
    let mut out = newton_sum(&seq, 0, last, cfg)?;
    out.error = out.error.max(worst_error);
    Ok(out)
}

/// Fractional derivative `∂_t^s f(t) = FFT_x(e^{-x} f(x + t))(s)`.
pub fn fractional_derivative(src: &SeriesSource, order: f64, t: f64, cfg: &NumericConfig) -> Result<Estimate> {
    fractional_derivative_iterated(src, &[order], t, cfg)
}

/// Fractional difference `Δ_t^s f(t) = FFT_x(e^{-x} FFT_x^{-1}(f(x + t)))(s)`
/// from samples `f(t), f(t+1), ...`.
pub fn fractional_difference(src: &SeriesSource, order: f64, t: f64, cfg: &NumericConfig) -> Result<Estimate> {
    cfg.validate()?;
    let n = cfg.truncation;
    let samples: Vec<Rational> = match src {
        SeriesSource::Callable(f) => (0..n).map(|k| from_f64(f(t + k as f64))).collect::<Result<_>>()?,
        SeriesSource::IntegerSamples(p) if nonnegative_integer(t).is_some() => {
            let start = t as u64;
            (0..n as u64).map(|k| exact_term(p(start + k))).collect::<Result<_>>()?
        }
        SeriesSource::IntegerSamples(_) => {
            return Err(Error::Domain("integer samples only support integer shifts".into()))
        }
        SeriesSource::Taylor { .. } => return Err(Error::WrongSourceKind("callable")),
    };
    let once = difference_column(samples);
    let twice: Vec<f64> = difference_column(once).iter().map(to_f64).collect();
    newton_sum(&twice, 0, order, cfg)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZetaSeries {
    pub partial_sum: f64,
    pub terms: Vec<f64>,
}

/// Partial sum through `n < terms` of `-1/(s-1) + sum_n B_{n+1} (-1)^{n+1} s^(rising n) / (n+1)!`
/// together with the raw terms. No convergence is implied.
pub fn zeta_formal_series(s: f64, terms: usize) -> Result<ZetaSeries> {
    if s == 1.0 {
        return Err(Error::Pole { function: "zeta", at: s });
    }
    if terms == 0 {
        return Err(Error::Domain("at least one term is required".into()));
    }
    let raw: Vec<f64> = (0..terms)
        .map(|n| {
            let b = bernoulli(n + 1);
            if b.is_zero() {
                return 0.0;
            }
            let signed = if n % 2 == 0 { -b } else { b };
            let coeff = to_f64(&(signed / Rational::from_integer(factorial(n + 1).into())));
            coeff * rising_factorial(&s, n as i64).expect("nonnegative index")
        })
        .collect();
    let partial_sum = -1.0 / (s - 1.0) + raw.iter().sum::<f64>();
    Ok(ZetaSeries { partial_sum, terms: raw })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Builtin;

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    fn exp_src(a: i64) -> SeriesSource {
        Builtin::Exp(crate::scalar::int(a)).taylor().unwrap()
    }

    #[test]
    fn derivative_examples() {
        let v = fractional_derivative(&exp_src(2), 0.5, 0.0, &cfg()).unwrap();
        assert!((v.value - 2f64.sqrt()).abs() < 1e-8, "{v:?}");
        let v = fractional_derivative(&exp_src(1), 1.0, 1.0, &cfg()).unwrap();
        assert!((v.value - 1f64.exp()).abs() < 1e-12, "{v:?}");
        let v = fractional_derivative(&exp_src(3), 0.5, 0.2, &cfg()).unwrap();
        let exact = 3f64.sqrt() * 0.6f64.exp();
        assert!((v.value - exact).abs() < 1e-6, "{v:?} vs {exact}");
    }

    #[test]
    fn half_derivative_twice() {
        let once = fractional_derivative(&exp_src(2), 1.0, 0.0, &cfg()).unwrap();
        let twice = fractional_derivative_iterated(&exp_src(2), &[0.5, 0.5], 0.0, &cfg()).unwrap();
        assert!((once.value - 2.0).abs() < 1e-12);
        assert!((twice.value - once.value).abs() < 1e-6, "{twice:?}");
    }

    #[test]
    fn derivative_of_slow_exponential() {
        let src = Builtin::Exp(crate::scalar::frac(1, 2)).taylor().unwrap();
        for (s, t) in [(0.5, 0.0), (1.5, 0.3), (2.0, -1.0)] {
            let v = fractional_derivative(&src, s, t, &cfg()).unwrap();
            let exact = 0.5f64.powf(s) * (0.5 * t).exp();
            assert!((v.value - exact).abs() < 1e-10, "s={s} t={t}: {v:?} vs {exact}");
        }
    }

    #[test]
    fn difference_examples() {
        let two = Builtin::parse("geometric(2)").unwrap().callable();
        let three = Builtin::parse("geometric(3)").unwrap().callable();
        let v = fractional_difference(&two, 0.5, 0.0, &cfg()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-8);
        assert_eq!(fractional_difference(&three, 1.0, 0.0, &cfg()).unwrap().value, 2.0);
        assert_eq!(fractional_difference(&two, 2.0, 1.0, &cfg()).unwrap().value, 2.0);
        let v = fractional_difference(&three, 0.5, 0.5, &cfg()).unwrap();
        assert!((v.value - 2f64.sqrt() * 3f64.sqrt()).abs() < 1e-8, "{v:?}");
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_formal_series(2.0, 1).unwrap();
        assert!((z.partial_sum + 0.5).abs() < 1e-15);
        assert_eq!(z.terms, vec![0.5]);
        let z = zeta_formal_series(2.0, 3).unwrap();
        assert!((z.terms[1] - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(z.terms[2], 0.0);
        assert!(matches!(zeta_formal_series(1.0, 3), Err(Error::Pole { .. })));
    }
}

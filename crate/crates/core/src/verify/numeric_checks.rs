//! Identity checks evaluated in floating point against closed forms.

use std::f64::consts::{E, PI};

use rand_chacha::ChaCha8Rng;

use super::support::{random_monomial, Tally};
use crate::combinatorics::rising_factorial;
use crate::error::Result;
use crate::exact::{fft_poly, ifft_poly, irft_poly, rft_poly};
use crate::numeric::{
    fft_fn, fractional_derivative, fractional_derivative_iterated, fractional_difference, gamma, gauss_legendre,
    ifft_fn, incomplete_gamma_upper, irft_fn, ln_gamma, mellin, rft_fn, rft_fn_damped, zeta_formal_series, Builtin,
    NumericConfig, QuadratureSpec, SeriesSource, Term,
};
use crate::polynomial::BasisPolynomial;
use crate::scalar::{from_f64, int, to_f64};

type Check = Result<Tally>;

fn poly_taylor(p: &BasisPolynomial) -> SeriesSource {
    let mono = p.convert(crate::Basis::Monomial);
    SeriesSource::taylor(f64::INFINITY, move |n| Term::Exact(mono.coeff(n as usize)))
}

fn poly_samples(p: &BasisPolynomial) -> SeriesSource {
    let p = p.clone();
    SeriesSource::samples(move |n| Term::Exact(p.eval(&int(n as i64))))
}

fn poly_callable(p: &BasisPolynomial) -> SeriesSource {
    let p = p.clone();
    SeriesSource::callable(move |x| p.eval(&x))
}

fn builtin(spec: &str) -> Builtin {
    Builtin::parse(spec).expect("builtin source spec")
}

pub(super) fn newton_taylor_duality(rng: &mut ChaCha8Rng, trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        let exact = fft_poly(&p);
        let src = poly_taylor(&p);
        for s in [0.0, 1.0, 2.0, 3.0, 5.0, 0.5, 1.7, 4.25] {
            let got = fft_fn(&src, s, &cfg)?.value;
            let expected = to_f64(&exact.eval(&from_f64(s)?));
            t.close_rel(got, expected, || format!("fft_fn({p}) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn ifft_series(rng: &mut ChaCha8Rng, trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default().with_truncation(200);
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        let exact = ifft_poly(&p);
        let src = poly_samples(&p);
        for x in [-1.5, 0.3, 2.0, 4.0] {
            let got = ifft_fn(&src, x, &cfg)?.value;
            t.close_rel(got, exact.eval(&x), || format!("ifft_fn of samples of {p} at {x}"));
        }
    }
    Ok(t)
}

pub(super) fn irft_series(rng: &mut ChaCha8Rng, trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default().with_truncation(200);
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        let exact = irft_poly(&p);
        let src = poly_callable(&p);
        for x in [-1.5, 0.3, 1.0, 2.5] {
            let got = irft_fn(&src, x, &cfg)?.value;
            t.close_rel(got, exact.eval(&x), || format!("irft_fn of {p} at {x}"));
        }
    }
    Ok(t)
}

const QUAD_S: [f64; 4] = [0.5, 1.5, 2.5, 3.7];

pub(super) fn quadrature_fidelity(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    for n in 0..=8 {
        for s in QUAD_S {
            let got = rft_fn(&|x: f64| x.powi(n), s, &quad)?;
            let expected = rising_factorial(&s, n as i64)?;
            t.close_rel(got, expected, || format!("rft_fn(t^{n}) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn rft_polynomial_agreement(rng: &mut ChaCha8Rng, trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        let exact = rft_poly(&p);
        let f = |x: f64| p.eval(&x);
        for s in QUAD_S {
            let got = rft_fn(&f, s, &quad)?;
            t.close_rel(got, exact.eval(&s), || format!("rft_fn({p}) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn mellin_consistency(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    type Case = (&'static str, fn(f64) -> f64);
    let cases: [Case; 4] = [
        ("1/(1+t)", |x| 1.0 / (1.0 + x)),
        ("sin t", f64::sin),
        ("t^2 e^(-t/2)", |x| (x * (-0.25 * x).exp()).powi(2)),
        ("cos(2t)", |x| (2.0 * x).cos()),
    ];
    for (name, f) in cases {
        for s in [0.5, 1.5, 2.5] {
            let lhs = rft_fn(&f, s, &quad)? * gamma(s)?;
            let rhs = mellin(|x| f(x) * (-x).exp(), s, 1e-13)?;
            t.close(lhs, rhs, || format!("Γ(s) RFT({name}) vs M(f e^(-t)) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn reflection_numeric(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    let cfg = NumericConfig::default().with_truncation(400);
    for (a, a_str) in [(0.25, "1/4"), (0.5, "1/2"), (0.75, "3/4")] {
        let src = builtin(&format!("exp({a_str})")).taylor()?;
        for s in [0.5, 1.0, 2.3] {
            let rft = rft_fn(&|x: f64| (-a * x).exp(), s, &quad)?;
            let fft = fft_fn(&src, -s, &cfg)?.value;
            let closed = (1.0 + a).powf(-s);
            t.close(rft, fft, || format!("RFT(e^(-{a}t))({s}) vs FFT(e^({a}t))(-{s})"));
            t.close(rft, closed, || format!("RFT(e^(-{a}t))({s}) vs (1+{a})^(-{s})"));
        }
    }
    Ok(t)
}

pub(super) fn summation_identity(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default().with_truncation(400);
    for (r, r_str) in [(0.5, "1/2"), (1.0 / 3.0, "1/3")] {
        let src = builtin(&format!("geometric({r_str})")).samples()?;
        // the integrand decays like e^{-(1-r)t}; stop once the tail is below 1e-13
        let upper = (1e-13f64 * (1.0 - r)).ln().abs() / (1.0 - r);
        let failure = std::cell::RefCell::new(None);
        let integral = gauss_legendre(
            |x| match ifft_fn(&src, x, &cfg) {
                Ok(e) => e.value,
                Err(err) => {
                    failure.borrow_mut().get_or_insert(err);
                    f64::NAN
                }
            },
            0.0,
            upper,
            24,
            20,
        );
        if let Some(err) = failure.into_inner() {
            return Err(err);
        }
        t.close(integral, 1.0 / (1.0 - r), || format!("∫ FFT⁻¹({r_str}^n) vs sum of {r_str}^n"));
    }
    Ok(t)
}

pub(super) fn charlier_orthogonality(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let a = 1.0;
    for n in 0..=5usize {
        for m in 0..=5usize {
            let got = crate::special::charlier_orthogonality_sum(n, m, a, 60);
            let expected = if n == m { a.exp() * gamma(n as f64 + 1.0)? / a.powi(n as i32) } else { 0.0 };
            t.close(got, expected, || format!("Charlier orthogonality sum n = {n}, m = {m}"));
        }
    }
    Ok(t)
}

const LAPLACE_S: [f64; 3] = [0.25, 0.5, 0.75];

pub(super) fn laplace_mellin(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    for s in LAPLACE_S {
        // e^t L(e^{-u})(t) = e^t / (1 + t), passed with the e^{-t} weight folded in
        let lhs = rft_fn_damped(&|x| 1.0 / (1.0 + x), s)?;
        let via_mellin = mellin(|x| (-x).exp(), 1.0 - s, 1e-13)?;
        t.close(lhs, gamma(1.0 - s)?, || format!("RFT(e^t/(1+t)) at {s} vs Γ(1-s)"));
        t.close(lhs, via_mellin, || format!("RFT(e^t/(1+t)) at {s} vs ∫ e^(-t) t^(-s) dt"));
    }
    Ok(t)
}

/// Distance between `M(e^{-t})(-s-1)` and the transform computed above.
pub(super) fn laplace_final_argument(_rng: &mut ChaCha8Rng, _trials: usize, _tol: f64) -> Check {
    let mut t = Tally::exact();
    for s in LAPLACE_S {
        let lhs = rft_fn_damped(&|x| 1.0 / (1.0 + x), s)?;
        t.trials += 1;
        t.max_abs_error = t.max_abs_error.max((lhs - gamma(-s - 1.0)?).abs());
    }
    t.note = Some("the integral ∫ f(t) t^(-s) dt is M(f)(1-s), not M(f)(-s-1)".into());
    Ok(t)
}

pub(super) fn fractional_derivative_check(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    let cases = [
        ("exp(2)", 0.5, 0.0, 2f64.sqrt()),
        ("exp(1)", 1.0, 1.0, E),
        ("exp(3)", 0.5, 0.2, 3f64.sqrt() * 0.6f64.exp()),
        ("exp(1/2)", 0.5, 0.0, 0.5f64.sqrt()),
        ("exp(1/2)", 1.5, 0.7, 0.5f64.powf(1.5) * 0.35f64.exp()),
    ];
    for (name, order, at, expected) in cases {
        let src = builtin(name).taylor()?;
        let got = fractional_derivative(&src, order, at, &cfg)?.value;
        t.close_rel(got, expected, || format!("∂^{order} {name} at {at}"));
    }
    Ok(t)
}

pub(super) fn fractional_ladder(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for name in ["exp(2)", "exp(1/2)"] {
        let src = builtin(name).taylor()?;
        for at in [0.0, 0.5] {
            let twice = fractional_derivative_iterated(&src, &[0.5, 0.5], at, &cfg)?.value;
            let once = fractional_derivative(&src, 1.0, at, &cfg)?.value;
            t.close(twice, once, || format!("∂^(1/2) ∂^(1/2) {name} vs ∂ {name} at {at}"));
        }
    }
    Ok(t)
}

pub(super) fn fractional_difference_check(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    let cases = [
        ("geometric(2)", 0.5, 0.0, 1.0),
        ("geometric(3)", 1.0, 0.0, 2.0),
        ("geometric(2)", 2.0, 1.0, 2.0),
        ("geometric(3)", 0.5, 0.0, 2f64.sqrt()),
        ("geometric(3/2)", 0.5, 0.5, 0.5f64.sqrt() * 1.5f64.sqrt()),
    ];
    for (name, order, at, expected) in cases {
        let src = builtin(name).callable();
        let got = fractional_difference(&src, order, at, &cfg)?.value;
        t.close_rel(got, expected, || format!("Δ^{order} {name} at {at}"));
    }
    Ok(t)
}

/// `1/((s-1)(s-2)...(s-n))`, the rising factorial of negative order `-n`.
fn rising_negative(s: f64, n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc / (s - j as f64))
}

const GAMMA_X: [f64; 3] = [0.5, 1.0, 2.0];

pub(super) fn incomplete_gamma(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for n in 1..=3u32 {
        let src = SeriesSource::samples(move |k| {
            Term::LogAbs { ln: ln_gamma(k as f64 + 1.0).unwrap_or(0.0) - ln_gamma((k + n as u64) as f64 + 1.0).unwrap_or(0.0), negative: false }
        });
        for x in GAMMA_X {
            let got = ifft_fn(&src, x, &cfg)?.value;
            let fact = gamma(n as f64)?;
            let expected = x.powi(-(n as i32)) * (1.0 - incomplete_gamma_upper(n, x)? / fact);
            t.close(got, expected, || format!("FFT⁻¹((x)_(-{n})) at {x}"));
        }
    }
    Ok(t)
}

pub(super) fn incomplete_gamma_rising(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for n in 1..=3u32 {
        let src = SeriesSource::callable(move |s| rising_negative(s, n));
        for x in GAMMA_X {
            let got = irft_fn(&src, x, &cfg)?.value;
            let fact = gamma(n as f64)?;
            let expected = x.powi(-(n as i32)) * (1.0 - incomplete_gamma_upper(n, -x)? / fact);
            t.close(got, expected, || format!("RFT⁻¹(x^(-{n} rising)) at {x}"));
        }
    }
    Ok(t)
}

const TABLE2_S: [f64; 2] = [0.7, 1.9];

pub(super) fn table2_power_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    let a = 1.3;
    for s in TABLE2_S {
        let lhs = rft_fn(&|x: f64| x.powf(a) * (-x).exp(), s, &quad)?;
        let rhs = gamma(s + a)? / gamma(s)? * rft_fn(&|x: f64| (-x).exp(), s + a, &quad)?;
        t.close(lhs, rhs, || format!("RFT(t^{a} e^(-t)) at {s}"));
    }
    Ok(t)
}

pub(super) fn table2_scaling_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let quad = QuadratureSpec::default();
    let a = 2.0f64;
    for s in TABLE2_S {
        let lhs = rft_fn(&|x: f64| (-a * x).exp(), s, &quad)?;
        let rhs = a.powf(-s) * rft_fn(&|x: f64| ((1.0 - 1.0 / a) * x).exp() * (-x).exp(), s, &quad)?;
        t.close(lhs, rhs, || format!("RFT(f({a}t)) at {s}"));
    }
    Ok(t)
}

pub(super) fn gamma_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    let src = Builtin::GammaSamples.samples()?;
    for i in 1..=9 {
        let x = i as f64 / 10.0;
        let got = ifft_fn(&src, x, &cfg)?.value;
        t.close(got, (-x).exp() / (1.0 - x), || format!("FFT⁻¹(Γ(x+1)) at {x}"));
    }
    Ok(t)
}

fn shifted_gamma_samples(y: f64) -> SeriesSource {
    SeriesSource::samples(move |n| Term::LogAbs { ln: ln_gamma(n as f64 + y).unwrap_or(f64::NAN), negative: false })
}

const SHIFT_Y: [f64; 2] = [0.5, 1.5];
const SHIFT_X: [f64; 3] = [0.1, 0.3, 0.5];

fn shifted_gamma_function(x: f64, y: f64) -> Result<f64> {
    Ok(gamma(y + 1.0)? * (-x).exp() / (1.0 - x).powf(y + 1.0))
}

pub(super) fn shifted_gamma_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for y in SHIFT_Y {
        let src = shifted_gamma_samples(y + 1.0);
        for x in SHIFT_X {
            let got = ifft_fn(&src, x, &cfg)?.value;
            t.close_rel(got, shifted_gamma_function(x, y)?, || format!("FFT⁻¹(Γ(x+{y}+1)) at {x}"));
        }
    }
    Ok(t)
}

/// Distance between `FFT⁻¹(Γ(x+y))` and `Γ(y+1) e^{-x} / (1-x)^{y+1}`.
pub(super) fn shifted_gamma_row_as_printed(_rng: &mut ChaCha8Rng, _trials: usize, _tol: f64) -> Check {
    let mut t = Tally::exact();
    let cfg = NumericConfig::default();
    for y in SHIFT_Y {
        let src = shifted_gamma_samples(y);
        for x in SHIFT_X {
            let got = ifft_fn(&src, x, &cfg)?.value;
            t.trials += 1;
            t.max_abs_error = t.max_abs_error.max((got - shifted_gamma_function(x, y)?).abs());
        }
    }
    t.note = Some("the transform of Γ(y+1) e^(-x)/(1-x)^(y+1) is Γ(x+y+1), not Γ(x+y)".into());
    Ok(t)
}

const EXP_A: [(f64, &str); 4] = [(0.5, "-1/2"), (1.5, "1/2"), (2.0, "1"), (3.0, "2")];
const TRIG_S: [f64; 3] = [0.5, 1.0, 2.3];

pub(super) fn exponential_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for (a, shift) in EXP_A {
        let src = builtin(&format!("exp({shift})")).taylor()?;
        for s in TRIG_S {
            let got = fft_fn(&src, s, &cfg)?.value;
            t.close(got, a.powf(s), || format!("FFT(e^(({a}-1)x)) at {s}"));
        }
    }
    Ok(t)
}

const OMEGA: [(f64, &str); 2] = [(0.5, "1/2"), (1.0, "1")];

fn trig_pair(omega: &str, s: f64, cfg: &NumericConfig) -> Result<(f64, f64)> {
    let c = fft_fn(&builtin(&format!("cos({omega})")).taylor()?, s, cfg)?.value;
    let sn = fft_fn(&builtin(&format!("sin({omega})")).taylor()?, s, cfg)?.value;
    Ok((c, sn))
}

pub(super) fn complex_exponential_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for (w, w_str) in OMEGA {
        for s in TRIG_S {
            let (re, im) = trig_pair(w_str, s, &cfg)?;
            t.close(re.hypot(im), (w * w + 1.0).powf(s / 2.0), || format!("|FFT(e^(i{w}x))| at {s}"));
            t.close(im.atan2(re), s * w.atan(), || format!("arg FFT(e^(i{w}x)) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn sin_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for (w, w_str) in OMEGA {
        let src = builtin(&format!("sin({w_str})")).taylor()?;
        for s in TRIG_S {
            let got = fft_fn(&src, s, &cfg)?.value;
            let expected = (w * w + 1.0).powf(s / 2.0) * (s * w.atan()).sin();
            t.close(got, expected, || format!("FFT(sin({w}x)) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn cos_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for (w, w_str) in OMEGA {
        let src = builtin(&format!("cos({w_str})")).taylor()?;
        for s in TRIG_S {
            let got = fft_fn(&src, s, &cfg)?.value;
            let expected = (w * w + 1.0).powf(s / 2.0) * (s * w.atan()).cos();
            t.close(got, expected, || format!("FFT(cos({w}x)) at {s}"));
        }
    }
    Ok(t)
}

/// Taylor source of `sin(x tan w)` (`odd`) or `cos(x tan w)`, in floating point.
fn tan_trig_source(w: f64, odd: bool) -> SeriesSource {
    let tan = w.tan();
    SeriesSource::taylor(f64::INFINITY, move |n| {
        let parity = u64::from(odd);
        if n % 2 != parity {
            return Term::Float(0.0);
        }
        let negative = (n / 2) % 2 == 1;
        let ln = n as f64 * tan.ln() - ln_gamma(n as f64 + 1.0).unwrap_or(f64::NAN);
        Term::LogAbs { ln, negative }
    })
}

const TAN_W: [f64; 2] = [0.3, 0.6];

pub(super) fn sin_tan_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for w in TAN_W {
        let src = tan_trig_source(w, true);
        for s in TRIG_S {
            let got = fft_fn(&src, s, &cfg)?.value;
            t.close(got, (w * s).sin() / w.cos().powf(s), || format!("FFT(sin(x tan {w})) at {s}"));
        }
    }
    Ok(t)
}

pub(super) fn cos_tan_row(_rng: &mut ChaCha8Rng, _trials: usize, tol: f64) -> Check {
    let mut t = Tally::numeric(tol);
    let cfg = NumericConfig::default();
    for w in TAN_W {
        let src = tan_trig_source(w, false);
        for s in TRIG_S {
            let got = fft_fn(&src, s, &cfg)?.value;
            t.close(got, (w * s).cos() / w.cos().powf(s), || format!("FFT(cos(x tan {w})) at {s}"));
        }
    }
    Ok(t)
}

/// Evaluates `sum_k (-x)^k/k! FFT⁻¹(f(t+k))(x) FFT⁻¹(g(t+k))(x)` against
/// `e^{-x} sum_k (-1)^k Δ^k f(0) Δ^k g(0) x^k / k!` for `f = 2^u`, `g = 3^u`.
pub(super) fn product_identity(_rng: &mut ChaCha8Rng, _trials: usize, _tol: f64) -> Check {
    let mut t = Tally::exact();
    let cfg = NumericConfig::default();
    for x in [0.25, 0.5, 1.0] {
        let mut lhs = 0.0;
        let mut weight = 1.0;
        for k in 0..60u64 {
            let f = SeriesSource::samples(move |n| Term::Exact(num_traits::pow(int(2), (n + k) as usize)));
            let g = SeriesSource::samples(move |n| Term::Exact(num_traits::pow(int(3), (n + k) as usize)));
            lhs += weight * ifft_fn(&f, x, &cfg)?.value * ifft_fn(&g, x, &cfg)?.value;
            weight *= -x / (k + 1) as f64;
        }
        let rhs = (-x).exp() * (-2.0 * x).exp();
        t.trials += 1;
        t.max_abs_error = t.max_abs_error.max((lhs - rhs).abs());
    }
    t.note = Some("holds numerically for f = 2^u, g = 3^u when FFT⁻¹(f(t+k)) is evaluated at x".into());
    Ok(t)
}

const ZETA: [(f64, f64); 3] = [
    (2.0, PI * PI / 6.0),
    (3.0, 1.202_056_903_159_594_2),
    (4.0, PI * PI * PI * PI / 90.0),
];

/// Compares `RFT(e^t/(e^t-1))` at integer `s` with ζ(s).
pub(super) fn zeta_quadrature(_rng: &mut ChaCha8Rng, _trials: usize, _tol: f64) -> Check {
    let mut t = Tally::exact();
    let mut worst_shifted = f64::INFINITY;
    for (s, zeta) in ZETA {
        let value = rft_fn_damped(&|x: f64| 1.0 / x.exp_m1(), s)?;
        t.trials += 1;
        t.max_abs_error = t.max_abs_error.max((value - zeta).abs());
        worst_shifted = worst_shifted.min((value - 1.0 - zeta).abs());
    }
    t.note = Some(format!(
        "RFT(e^t/(e^t-1)) matches ζ(s) at s = 2, 3, 4 to {:.1e}; its distance from 1 + ζ(s) is at least {worst_shifted:.3}",
        t.max_abs_error
    ));
    Ok(t)
}

/// Records the behavior of the formal Bernoulli series partial sums at s = 2.
pub(super) fn zeta_partial_sums(_rng: &mut ChaCha8Rng, _trials: usize, _tol: f64) -> Check {
    let mut t = Tally::exact();
    let series = zeta_formal_series(2.0, 30)?;
    let (min_index, _) = series
        .terms
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .fold((0, f64::INFINITY), |best, (i, v)| if v.abs() < best.1 { (i, v.abs()) } else { best });
    let truncated = -1.0 + series.terms[..=min_index].iter().sum::<f64>();
    let zeta2 = PI * PI / 6.0;
    t.trials = series.terms.len();
    t.max_abs_error = (truncated - zeta2).abs();
    t.note = Some(format!(
        "at s = 2 the smallest term is n = {min_index}; the partial sum there is {truncated:.6} against ζ(2) = {zeta2:.6}; through 30 terms it is {:.3e}",
        series.partial_sum
    ));
    Ok(t)
}

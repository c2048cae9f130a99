//! Function sources for the numeric transforms: power-series coefficients,
//! integer samples or a plain callable, plus the builtin named families.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::scalar::{int, ln_abs, parse_rational, to_f64, Rational};

use super::gamma::ln_factorial;

/// A single coefficient or sample. `LogAbs` carries values whose magnitude
/// would overflow a float, such as large factorials.
#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    Exact(Rational),
    Float(f64),
    LogAbs { ln: f64, negative: bool },
}

impl Term {
    pub fn to_f64(&self) -> f64 {
        match self {
            Term::Exact(r) => to_f64(r),
            Term::Float(v) => *v,
            Term::LogAbs { ln, negative } => {
                let m = ln.exp();
                if *negative {
                    -m
                } else {
                    m
                }
            }
        }
    }

    /// `(ln |v|, is_negative)`, or `None` for an exact zero.
    pub fn log_parts(&self) -> Option<(f64, bool)> {
        match self {
            Term::Exact(r) if r.is_zero() => None,
            Term::Exact(r) => Some((ln_abs(r), r.is_negative())),
            Term::Float(v) if *v == 0.0 => None,
            Term::Float(v) => Some((v.abs().ln(), *v < 0.0)),
            Term::LogAbs { ln, negative } => Some((*ln, *negative)),
        }
    }

    /// `n! * v` as a float.
    pub(crate) fn times_factorial(&self, n: usize) -> f64 {
        match self {
            Term::Exact(r) => to_f64(&(r * Rational::from_integer(factorial(n).into()))),
            _ => match self.log_parts() {
                None => 0.0,
                Some((ln, negative)) => {
                    let m = (ln + ln_factorial(n)).exp();
                    if negative {
                        -m
                    } else {
                        m
                    }
                }
            },
        }
    }
}

pub type Provider = Arc<dyn Fn(u64) -> Term + Send + Sync>;
pub type Callable = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Supplier of a function to the numeric transforms.
#[derive(Clone)]
pub enum SeriesSource {
    /// Power-series coefficients `a_n` about 0, with a radius-of-validity hint.
    Taylor { coeff: Provider, radius: f64 },
    /// Samples `f(0), f(1), ...`.
    IntegerSamples(Provider),
    /// Pointwise evaluation at real arguments.
    Callable(Callable),
}

impl fmt::Debug for SeriesSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesSource::Taylor { radius, .. } => write!(f, "Taylor {{ radius: {radius} }}"),
            SeriesSource::IntegerSamples(_) => f.write_str("IntegerSamples"),
            SeriesSource::Callable(_) => f.write_str("Callable"),
        }
    }
}

impl SeriesSource {
    pub fn taylor(radius: f64, coeff: impl Fn(u64) -> Term + Send + Sync + 'static) -> Self {
        SeriesSource::Taylor { coeff: Arc::new(coeff), radius }
    }

    pub fn samples(f: impl Fn(u64) -> Term + Send + Sync + 'static) -> Self {
        SeriesSource::IntegerSamples(Arc::new(f))
    }

    pub fn callable(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        SeriesSource::Callable(Arc::new(f))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SeriesSource::Taylor { .. } => "taylor",
            SeriesSource::IntegerSamples(_) => "integer_samples",
            SeriesSource::Callable(_) => "callable",
        }
    }
}

/// One of the builtin named functions, available in whichever views it supports.
#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    /// `e^{a x}`.
    Exp(Rational),
    /// `sin(w x)`.
    Sin(Rational),
    /// `cos(w x)`.
    Cos(Rational),
    /// `r^x` for `r > 0`.
    Geometric(Rational),
    /// `Γ(x + 1)`, so `n!` at the integers.
    GammaSamples,
}

fn trig_coeff(w: &Rational, n: u64, odd: bool) -> Term {
    let parity = if odd { 1 } else { 0 };
    if n % 2 != parity {
        return Term::Exact(Rational::zero());
    }
    let m = n / 2;
    let sign = if m.is_multiple_of(2) { int(1) } else { int(-1) };
    Term::Exact(sign * num_traits::pow(w.clone(), n as usize) / Rational::from_integer(factorial(n as usize).into()))
}

impl Builtin {
    /// Parses `exp(a)`, `sin(w)`, `cos(w)`, `geometric(r)` or `gamma-samples`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "gamma-samples" {
            return Ok(Builtin::GammaSamples);
        }
        let (name, rest) = spec
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("unknown source `{spec}`")))?;
        let arg = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing `)` in source `{spec}`")))?;
        let value = parse_rational(arg.trim())?;
        match name.trim() {
            "exp" => Ok(Builtin::Exp(value)),
            "sin" => Ok(Builtin::Sin(value)),
            "cos" => Ok(Builtin::Cos(value)),
            "geometric" if value.is_positive() => Ok(Builtin::Geometric(value)),
            "geometric" => Err(Error::Domain("geometric ratio must be positive".into())),
            other => Err(Error::Parse(format!("unknown source family `{other}`"))),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Builtin::Exp(a) => (to_f64(a) * x).exp(),
            Builtin::Sin(w) => (to_f64(w) * x).sin(),
            Builtin::Cos(w) => (to_f64(w) * x).cos(),
            Builtin::Geometric(r) => to_f64(r).powf(x),
            Builtin::GammaSamples => statrs::function::gamma::gamma(x + 1.0),
        }
    }

    pub fn taylor(&self) -> Result<SeriesSource> {
        Ok(match self.clone() {
            Builtin::Exp(a) => SeriesSource::taylor(f64::INFINITY, move |n| {
                Term::Exact(num_traits::pow(a.clone(), n as usize) / Rational::from_integer(factorial(n as usize).into()))
            }),
            Builtin::Sin(w) => SeriesSource::taylor(f64::INFINITY, move |n| trig_coeff(&w, n, true)),
            Builtin::Cos(w) => SeriesSource::taylor(f64::INFINITY, move |n| trig_coeff(&w, n, false)),
            Builtin::Geometric(r) => {
                let ln_r = to_f64(&r).ln();
                SeriesSource::taylor(f64::INFINITY, move |n| {
                    if ln_r == 0.0 {
                        return Term::Float(if n == 0 { 1.0 } else { 0.0 });
                    }
                    Term::LogAbs {
                        ln: n as f64 * ln_r.abs().ln() - ln_factorial(n as usize),
                        negative: ln_r < 0.0 && n % 2 == 1,
                    }
                })
            }
            Builtin::GammaSamples => return Err(Error::WrongSourceKind("taylor")),
        })
    }

    pub fn samples(&self) -> Result<SeriesSource> {
        Ok(match self.clone() {
            Builtin::Geometric(r) => SeriesSource::samples(move |n| Term::Exact(num_traits::pow(r.clone(), n as usize))),
            Builtin::GammaSamples => SeriesSource::samples(|n| Term::Exact(Rational::from_integer(factorial(n as usize).into()))),
            Builtin::Exp(a) => {
                let a = to_f64(&a);
                SeriesSource::samples(move |n| Term::LogAbs { ln: a * n as f64, negative: false })
            }
            other => SeriesSource::samples(move |n| Term::Float(other.eval(n as f64))),
        })
    }

    pub fn callable(&self) -> SeriesSource {
        let this = self.clone();
        SeriesSource::callable(move |x| this.eval(x))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Exp(a) => write!(f, "exp({a})"),
            Builtin::Sin(w) => write!(f, "sin({w})"),
            Builtin::Cos(w) => write!(f, "cos({w})"),
            Builtin::Geometric(r) => write!(f, "geometric({r})"),
            Builtin::GammaSamples => f.write_str("gamma-samples"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn parse_builtins() {
        assert_eq!(Builtin::parse("exp(2)").unwrap(), Builtin::Exp(int(2)));
        assert_eq!(Builtin::parse("geometric(1/2)").unwrap(), Builtin::Geometric(frac(1, 2)));
        assert_eq!(Builtin::parse(" gamma-samples ").unwrap(), Builtin::GammaSamples);
        assert!(Builtin::parse("tan(1)").is_err());
        assert!(Builtin::parse("geometric(-1)").is_err());
        assert!(Builtin::parse("exp(2").is_err());
        assert_eq!(Builtin::parse("sin(0.5)").unwrap().to_string(), "sin(1/2)");
    }

    #[test]
    fn views() {
        let SeriesSource::Taylor { coeff, .. } = Builtin::parse("sin(2)").unwrap().taylor().unwrap() else {
            panic!("expected taylor view");
        };
        assert_eq!(coeff(3), Term::Exact(frac(-8, 6)));
        assert_eq!(coeff(2), Term::Exact(int(0)));
        assert!(Builtin::GammaSamples.taylor().is_err());
        let SeriesSource::IntegerSamples(s) = Builtin::GammaSamples.samples().unwrap() else {
            panic!("expected samples view");
        };
        assert_eq!(s(5).to_f64(), 120.0);
        let SeriesSource::Taylor { coeff, .. } = Builtin::parse("geometric(2)").unwrap().taylor().unwrap() else {
            panic!("expected taylor view");
        };
        assert!((coeff(2).to_f64() - 2f64.ln().powi(2) / 2.0).abs() < 1e-15);
    }
}

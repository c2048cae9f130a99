//! Exact rationals and the small numeric trait shared by the exact and the
//! floating-point evaluation paths.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Values that falling/rising factorials and polynomial evaluation can run over.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Multiplicative inverse; callers check for zero first.
    fn inverse(&self) -> Self;
}

impl Scalar for Rational {
    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
    fn inverse(&self) -> Self {
        1.0 / *self
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest `f64`, correct even when numerator and denominator overflow `f64`.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let sign = if r.is_negative() { -1.0 } else { 1.0 };
        sign * ln_abs(r).exp()
    })
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_f64(x).ok_or_else(|| Error::Domain(format!("non-finite value {x}")))
}

fn ln_bigint(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.abs().to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = v.abs() >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |r|`; `-inf` for zero.
pub fn ln_abs(r: &Rational) -> f64 {
    if Zero::is_zero(r) {
        return f64::NEG_INFINITY;
    }
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

/// Parses `"p/q"`, `"p"` or a decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        let numer: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("invalid number `{s}`")))?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
        .and_then(|r| {
            if r.denom().is_zero() {
                Err(Error::Parse(format!("zero denominator in `{s}`")))
            } else {
                Ok(r)
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_rational("1.5").unwrap(), frac(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn huge_ratio_to_float() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = Rational::new(big.clone() * BigInt::from(3), big * BigInt::from(2));
        assert_eq!(to_f64(&r), 1.5);
        let tiny = Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(7), 500));
        let expected = (-(500.0 * 7f64.ln())).exp();
        assert_eq!(to_f64(&tiny), expected);
        assert!((ln_abs(&tiny) + 500.0 * 7f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn float_round_trip_is_exact() {
        let r = from_f64(0.2).unwrap();
        assert_eq!(to_f64(&r), 0.2);
        assert!(from_f64(f64::NAN).is_err());
    }
}

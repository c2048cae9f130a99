//! Exact polynomials in the monomial, falling-factorial and rising-factorial
//! bases, and the finite operator calculus acting on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{
    binomial, factorial, stirling_first_row, stirling_second_row,
};
use crate::error::{Error, Result};
use crate::scalar::{int, parse_rational, Rational, Scalar};
use crate::series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `x^n`
    Monomial,
    /// `(x)_n = x (x-1) ... (x-n+1)`
    Falling,
    /// `x^(n) = x (x+1) ... (x+n-1)`
    Rising,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Monomial, Basis::Falling, Basis::Rising];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Falling => "falling",
            Basis::Rising => "rising",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(Basis::Monomial),
            "falling" => Ok(Basis::Falling),
            "rising" => Ok(Basis::Rising),
            other => Err(Error::Parse(format!("unknown basis `{other}`"))),
        }
    }
}

/// Finite coefficient vector over one of the three bases.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and structural equality is equality of polynomials in the
/// same basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPolynomial {
    basis: Basis,
    coeffs: Vec<Rational>,
}

impl BasisPolynomial {
    pub fn new(basis: Basis, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BasisPolynomial { basis, coeffs }
    }

    pub fn from_ints(basis: Basis, coeffs: &[i64]) -> Self {
        Self::new(basis, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(basis: Basis) -> Self {
        BasisPolynomial { basis, coeffs: Vec::new() }
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::new(basis, vec![c])
    }

    /// The `n`-th basis element: `x^n`, `(x)_n` or `x^(n)`.
    pub fn basis_element(basis: Basis, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        BasisPolynomial { basis, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Same coefficients read in another basis, without conversion.
    pub fn retag(self, basis: Basis) -> Self {
        BasisPolynomial { basis, ..self }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.basis, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The same polynomial function written in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let mono = self.to_monomial_coeffs();
        let coeffs = match target {
            Basis::Monomial => mono,
            Basis::Falling => from_monomial(&mono, false),
            Basis::Rising => from_monomial(&mono, true),
        };
        Self::new(target, coeffs)
    }

    fn to_monomial_coeffs(&self) -> Vec<Rational> {
        match self.basis {
            Basis::Monomial => self.coeffs.clone(),
            Basis::Falling | Basis::Rising => {
                let signed = self.basis == Basis::Falling;
                let mut out = vec![Rational::zero(); self.coeffs.len()];
                for (n, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let row = stirling_first_row(n);
                    for (k, c) in row.iter().enumerate() {
                        let c = Rational::from_integer(BigInt::from(c.clone()));
                        if signed && (n + k) % 2 == 1 {
                            out[k] -= a * c;
                        } else {
                            out[k] += a * c;
                        }
                    }
                }
                out
            }
        }
    }

    /// Value at `x`, using nested factorial products for the factorial bases.
    pub fn eval<T: Scalar>(&self, x: &T) -> T {
        let mut acc = T::zero();
        for (n, a) in self.coeffs.iter().enumerate().rev() {
            let factor = match self.basis {
                Basis::Monomial => x.clone(),
                Basis::Falling => x.clone() - T::from_int(n as i64),
                Basis::Rising => x.clone() + T::from_int(n as i64),
            };
            // Horner step for element n+1 = element n * factor
            acc = acc * factor + T::from_rational(a);
        }
        acc
    }

    /// `p(x + a)` in the same basis.
    pub fn shift(&self, a: &Rational) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let mono = self.convert(Basis::Monomial);
        let p = mono.coeffs();
        let powers: Vec<Rational> = (0..p.len())
            .scan(Rational::one(), |acc, _| {
                let cur = acc.clone();
                *acc = &*acc * a;
                Some(cur)
            })
            .collect();
        let coeffs = (0..p.len())
            .map(|k| {
                (k..p.len()).fold(Rational::zero(), |acc, n| {
                    acc + &p[n]
                        * Rational::from_integer(binomial(n, k).into())
                        * &powers[n - k]
                })
            })
            .collect();
        Self::new(Basis::Monomial, coeffs).convert(self.basis)
    }

    /// `p(a x)` in the same basis.
    pub fn scale_argument(&self, a: &Rational) -> Self {
        let mono = self.convert(Basis::Monomial);
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(mono.coeffs.len());
        for c in mono.coeffs {
            coeffs.push(c * &power);
            power *= a;
        }
        Self::new(Basis::Monomial, coeffs).convert(self.basis)
    }

    /// Exact product; both operands must share a basis.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.basis));
        }
        let coeffs = match self.basis {
            Basis::Monomial => series::mul(
                &self.coeffs,
                &other.coeffs,
                self.coeffs.len() + other.coeffs.len() - 1,
            ),
            Basis::Falling => falling_product(&self.coeffs, &other.coeffs),
            Basis::Rising => {
                // x^(n) = (-1)^n (-x)_n: flip odd coefficients, multiply in the
                // falling basis, flip back.
                let flip = |c: &[Rational]| -> Vec<Rational> {
                    c.iter()
                        .enumerate()
                        .map(|(n, a)| if n % 2 == 1 { -a } else { a.clone() })
                        .collect()
                };
                flip(&falling_product(&flip(&self.coeffs), &flip(&other.coeffs)))
            }
        };
        Ok(Self::new(self.basis, coeffs))
    }

    pub fn derivative(&self) -> Self {
        let mono = self.convert(Basis::Monomial);
        let coeffs = mono
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a * int(n as i64))
            .collect();
        Self::new(Basis::Monomial, coeffs).convert(self.basis)
    }

    /// `Δp(x) = p(x+1) - p(x)`.
    pub fn forward_difference(&self) -> Self {
        let fall = self.convert(Basis::Falling);
        let coeffs = fall
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a * int(n as i64))
            .collect();
        Self::new(Basis::Falling, coeffs).convert(self.basis)
    }

    /// `∇p(x) = p(x) - p(x-1)`, diagonal in the rising basis.
    pub fn backward_difference(&self) -> Self {
        let rise = self.convert(Basis::Rising);
        let coeffs = rise
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a * int(n as i64))
            .collect();
        Self::new(Basis::Rising, coeffs).convert(self.basis)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mono = self.convert(Basis::Monomial);
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            mono.coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a / int(n as i64 + 1)),
        );
        Self::new(Basis::Monomial, coeffs).convert(self.basis)
    }

    /// Indefinite sum `Δ⁻¹p`, normalized to vanish at `x = 0`.
    pub fn indefinite_sum(&self) -> Self {
        let fall = self.convert(Basis::Falling);
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            fall.coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a / int(n as i64 + 1)),
        );
        Self::new(Basis::Falling, coeffs).convert(self.basis)
    }

    pub fn apply(&self, op: &OperatorExpr) -> Self {
        apply_operator(op, self)
    }
}

fn from_monomial(mono: &[Rational], rising: bool) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); mono.len()];
    for (n, a) in mono.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let row = stirling_second_row(n);
        for (k, s) in row.iter().enumerate() {
            let s = Rational::from_integer(BigInt::from(s.clone()));
            if rising && (n + k) % 2 == 1 {
                out[k] -= a * s;
            } else {
                out[k] += a * s;
            }
        }
    }
    out
}

/// Linearization `(x)_n (x)_m = sum_k C(n,k) C(m,k) k! (x)_(n+m-k)`.
pub fn falling_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (n, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (m, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            for k in 0..=n.min(m) {
                let c = binomial(n, k) * binomial(m, k) * factorial(k);
                out[n + m - k] += &xy * Rational::from_integer(c.into());
            }
        }
    }
    out
}

impl Add for &BasisPolynomial {
    type Output = BasisPolynomial;

    /// Sum in the basis of the left operand.
    fn add(self, rhs: &BasisPolynomial) -> BasisPolynomial {
        let rhs = rhs.convert(self.basis);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        BasisPolynomial::new(self.basis, coeffs)
    }
}

impl Sub for &BasisPolynomial {
    type Output = BasisPolynomial;

    fn sub(self, rhs: &BasisPolynomial) -> BasisPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BasisPolynomial {
    type Output = BasisPolynomial;

    fn neg(self) -> BasisPolynomial {
        BasisPolynomial::new(self.basis, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&Rational> for &BasisPolynomial {
    type Output = BasisPolynomial;

    fn mul(self, rhs: &Rational) -> BasisPolynomial {
        self.scale(rhs)
    }
}

impl fmt::Display for BasisPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let element = match (self.basis, n) {
                (_, 0) => String::new(),
                (Basis::Monomial, 1) => "x".into(),
                (Basis::Monomial, _) => format!("x^{n}"),
                (Basis::Falling, _) => format!("(x)_{n}"),
                (Basis::Rising, _) => format!("x^({n})"),
            };
            match (element.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&element)?,
                (false, false) => write!(f, "({c})*{element}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialJson {
    basis: Basis,
    coeffs: Vec<String>,
}

impl Serialize for BasisPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BasisPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(BasisPolynomial::new(raw.basis, coeffs))
    }
}

/// Operators of the finite calculus. Formal series in `∂` or `Δ` terminate on
/// polynomials because both are nilpotent there.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr {
    /// `∂^k`
    Derivative(usize),
    /// `Δ^k`
    ForwardDifference(usize),
    /// `∇^k = (Δ/E)^k`
    BackwardDifference(usize),
    /// `E^a = (1+Δ)^a`, expanded as a Newton series in `Δ`.
    Shift(Rational),
    /// `(log(1+∂))^k`
    Log1pDerivative(usize),
    /// `(e^Δ - 1)^k`
    ExpDifferenceMinusOne(usize),
    /// `(1+∂)^a`
    BinomialDerivative(Rational),
    /// `e^(aΔ)`
    ExpDifference(Rational),
    /// `e^(a∂)`
    ExpDerivative(Rational),
    /// `a^(x∇)`, resummed as `sum_k (a-1)^k/k! (x)_k ∇^k`.
    Scale(Rational),
}

/// Base operator a formal series is expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOperator {
    Derivative,
    ForwardDifference,
    BackwardDifference,
}

/// `sum_j coeffs[j] D^j p`, truncated where `D^j p` vanishes.
pub fn apply_series(base: BaseOperator, coeffs: &[Rational], p: &BasisPolynomial) -> BasisPolynomial {
    let natural = match base {
        BaseOperator::Derivative => Basis::Monomial,
        BaseOperator::ForwardDifference => Basis::Falling,
        BaseOperator::BackwardDifference => Basis::Rising,
    };
    let mut power = p.convert(natural);
    let mut acc = BasisPolynomial::zero(natural);
    for c in coeffs {
        if power.is_zero() {
            break;
        }
        if !c.is_zero() {
            acc = &acc + &power.scale(c);
        }
        power = match base {
            BaseOperator::Derivative => power.derivative(),
            BaseOperator::ForwardDifference => power.forward_difference(),
            BaseOperator::BackwardDifference => power.backward_difference(),
        };
    }
    acc.convert(p.basis())
}

fn nth_power(base: BaseOperator, k: usize, p: &BasisPolynomial) -> BasisPolynomial {
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[k] = Rational::one();
    apply_series(base, &coeffs, p)
}

/// Applies `op` to `p`; the result is expressed in `p`'s basis.
pub fn apply_operator(op: &OperatorExpr, p: &BasisPolynomial) -> BasisPolynomial {
    // series need one coefficient per possible nonzero power
    let len = p.degree().map_or(1, |d| d + 2);
    match op {
        OperatorExpr::Derivative(k) => nth_power(BaseOperator::Derivative, *k, p),
        OperatorExpr::ForwardDifference(k) => nth_power(BaseOperator::ForwardDifference, *k, p),
        OperatorExpr::BackwardDifference(k) => {
            nth_power(BaseOperator::BackwardDifference, *k, p)
        }
        OperatorExpr::Shift(a) | OperatorExpr::BinomialDerivative(a) => {
            let base = if matches!(op, OperatorExpr::Shift(_)) {
                BaseOperator::ForwardDifference
            } else {
                BaseOperator::Derivative
            };
            apply_series(base, &series::binomial(a, len), p)
        }
        OperatorExpr::Log1pDerivative(k) => apply_series(
            BaseOperator::Derivative,
            &series::pow(&series::log1p(len), *k, len),
            p,
        ),
        OperatorExpr::ExpDifferenceMinusOne(k) => apply_series(
            BaseOperator::ForwardDifference,
            &series::pow(&series::expm1(len), *k, len),
            p,
        ),
        OperatorExpr::ExpDifference(a) => {
            apply_series(BaseOperator::ForwardDifference, &series::exp(a, len), p)
        }
        OperatorExpr::ExpDerivative(a) => {
            apply_series(BaseOperator::Derivative, &series::exp(a, len), p)
        }
        OperatorExpr::Scale(a) => {
            let mut acc = BasisPolynomial::zero(Basis::Falling);
            let mut weight = Rational::one();
            let mut diff = p.convert(Basis::Rising);
            let mut k = 0usize;
            while !diff.is_zero() {
                let term = BasisPolynomial::basis_element(Basis::Falling, k)
                    .multiply(&diff.convert(Basis::Falling))
                    .expect("same basis");
                acc = &acc + &term.scale(&weight);
                k += 1;
                weight = weight * (a - int(1)) / int(k as i64);
                diff = diff.backward_difference();
            }
            acc.convert(p.basis())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use proptest::prelude::*;

    fn poly(basis: Basis, c: &[i64]) -> BasisPolynomial {
        BasisPolynomial::from_ints(basis, c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = poly(Basis::Monomial, &[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(poly(Basis::Falling, &[0, 0]).is_zero());
        assert_eq!(BasisPolynomial::zero(Basis::Rising).degree(), None);
    }

    #[test]
    fn convert_examples() {
        let x2 = poly(Basis::Monomial, &[0, 0, 1]);
        assert_eq!(x2.convert(Basis::Falling), poly(Basis::Falling, &[0, 1, 1]));
        let f2 = poly(Basis::Falling, &[0, 0, 1]);
        assert_eq!(f2.convert(Basis::Monomial), poly(Basis::Monomial, &[0, -1, 1]));
        assert_eq!(x2.convert(Basis::Rising), poly(Basis::Rising, &[0, -1, 1]));
        for b in Basis::ALL {
            assert!(BasisPolynomial::zero(Basis::Monomial).convert(b).is_zero());
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(Basis::Falling, &[0, 0, 1]).eval(&int(3)), int(6));
        assert_eq!(BasisPolynomial::zero(Basis::Rising).eval(&int(5)), int(0));
        assert_eq!(poly(Basis::Monomial, &[0, 1, 1]).eval(&frac(1, 2)), frac(3, 4));
        assert_eq!(poly(Basis::Rising, &[0, 0, 1]).eval(&1.5f64), 3.75);
    }

    #[test]
    fn operator_examples() {
        let f2 = poly(Basis::Falling, &[0, 0, 1]);
        assert_eq!(
            apply_operator(&OperatorExpr::ForwardDifference(1), &f2),
            poly(Basis::Falling, &[0, 2])
        );
        let t2 = poly(Basis::Monomial, &[0, 1, 1]);
        assert_eq!(
            apply_operator(&OperatorExpr::Log1pDerivative(1), &t2),
            poly(Basis::Monomial, &[0, 2])
        );
        assert_eq!(
            apply_operator(&OperatorExpr::Scale(int(2)), &f2),
            poly(Basis::Falling, &[0, 0, 4])
        );
        // ∇(x)_2 = 2(x-1) = 2x - 2
        assert_eq!(
            apply_operator(&OperatorExpr::BackwardDifference(1), &f2).convert(Basis::Monomial),
            poly(Basis::Monomial, &[-2, 2])
        );
    }

    #[test]
    fn shift_examples() {
        let x2 = poly(Basis::Monomial, &[0, 0, 1]);
        assert_eq!(x2.shift(&int(1)), poly(Basis::Monomial, &[1, 2, 1]));
        let f2 = poly(Basis::Falling, &[0, 0, 1]);
        assert_eq!(f2.shift(&int(1)), poly(Basis::Falling, &[0, 2, 1]));
        assert_eq!(f2.shift(&int(0)), f2);
    }

    #[test]
    fn scale_examples() {
        assert_eq!(
            poly(Basis::Monomial, &[0, 0, 1]).scale_argument(&int(2)),
            poly(Basis::Monomial, &[0, 0, 4])
        );
        assert_eq!(
            poly(Basis::Monomial, &[1, 1]).scale_argument(&int(-1)),
            poly(Basis::Monomial, &[1, -1])
        );
        assert_eq!(
            poly(Basis::Falling, &[0, 0, 1]).scale_argument(&int(2)),
            poly(Basis::Falling, &[0, 2, 4])
        );
    }

    #[test]
    fn multiply_examples() {
        let f1 = poly(Basis::Falling, &[0, 1]);
        let f2 = poly(Basis::Falling, &[0, 0, 1]);
        assert_eq!(f1.multiply(&f1).unwrap(), poly(Basis::Falling, &[0, 1, 1]));
        assert_eq!(f2.multiply(&f1).unwrap(), poly(Basis::Falling, &[0, 0, 2, 1]));
        assert!(f1.multiply(&BasisPolynomial::zero(Basis::Falling)).unwrap().is_zero());
        assert!(matches!(
            f1.multiply(&poly(Basis::Monomial, &[1])),
            Err(Error::BasisMismatch { .. })
        ));
        // x^(1) x^(1) = x^2 = x^(2) - x^(1)
        let r1 = poly(Basis::Rising, &[0, 1]);
        assert_eq!(r1.multiply(&r1).unwrap(), poly(Basis::Rising, &[0, -1, 1]));
    }

    #[test]
    fn indefinite_operators_invert_their_base() {
        let p = poly(Basis::Monomial, &[3, -1, 4, 1]);
        assert_eq!(p.antiderivative().derivative(), p);
        assert_eq!(p.indefinite_sum().forward_difference(), p);
        assert_eq!(p.indefinite_sum().eval(&int(0)), int(0));
    }

    #[test]
    fn json_round_trip() {
        let p = BasisPolynomial::new(Basis::Falling, vec![frac(-1, 3), int(0), int(2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"basis":"falling","coeffs":["-1/3","0","2"]}"#);
        let back: BasisPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let padded: BasisPolynomial =
            serde_json::from_str(r#"{"basis":"monomial","coeffs":["1","0"]}"#).unwrap();
        assert_eq!(padded.coeffs().len(), 1);
        assert!(serde_json::from_str::<BasisPolynomial>(r#"{"basis":"cubic","coeffs":[]}"#).is_err());
    }

    fn basis() -> impl Strategy<Value = Basis> {
        prop_oneof![Just(Basis::Monomial), Just(Basis::Falling), Just(Basis::Rising)]
    }

    fn polynomial(max_len: usize) -> impl Strategy<Value = BasisPolynomial> {
        (
            basis(),
            prop::collection::vec((-9i64..=9, 1i64..=9), 0..=max_len),
        )
            .prop_map(|(b, c)| {
                BasisPolynomial::new(b, c.into_iter().map(|(n, d)| frac(n, d)).collect())
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn basis_round_trip(p in polynomial(21), target in basis()) {
            prop_assert_eq!(p.convert(target).convert(p.basis()), p);
        }

        #[test]
        fn conversion_preserves_values(p in polynomial(12), target in basis(), x in -20i64..20) {
            prop_assert_eq!(p.convert(target).eval(&int(x)), p.eval(&int(x)));
        }

        #[test]
        fn product_consistency(p in polynomial(11), q in polynomial(11), b in basis()) {
            let (p, q) = (p.convert(b), q.convert(b));
            let mono = p.convert(Basis::Monomial).multiply(&q.convert(Basis::Monomial)).unwrap();
            prop_assert_eq!(p.multiply(&q).unwrap(), mono.convert(b));
        }

        #[test]
        fn nilpotency(p in polynomial(12)) {
            let d = p.degree().map_or(0, |d| d + 1);
            prop_assert!(apply_operator(&OperatorExpr::Derivative(d), &p).is_zero());
            prop_assert!(apply_operator(&OperatorExpr::ForwardDifference(d), &p).is_zero());
        }

        #[test]
        fn shift_composition(p in polynomial(10), a in (-9i64..9, 1i64..5), b in (-9i64..9, 1i64..5)) {
            let (a, b) = (frac(a.0, a.1), frac(b.0, b.1));
            prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(a + b)));
        }

        #[test]
        fn newton_shift_matches_taylor_shift(p in polynomial(10), a in (-9i64..9, 1i64..5)) {
            let a = frac(a.0, a.1);
            prop_assert_eq!(apply_operator(&OperatorExpr::Shift(a.clone()), &p), p.shift(&a));
            prop_assert_eq!(apply_operator(&OperatorExpr::ExpDerivative(a.clone()), &p), p.shift(&a));
        }
    }
}

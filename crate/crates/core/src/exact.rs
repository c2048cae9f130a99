//! The falling and rising factorial transforms as exact maps on polynomials,
//! plus the binomial transform, binomial convolution and the Hadamard-type
//! product rule, all over the rationals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{binomial, factorial, falling_factorial};
use crate::polynomial::{Basis, BasisPolynomial};
use crate::scalar::{int, Rational};
use crate::series;

/// FFT: monomial coefficients reread over the falling-factorial basis.
pub fn fft_poly(p: &BasisPolynomial) -> BasisPolynomial {
    p.convert(Basis::Monomial).retag(Basis::Falling)
}

/// Inverse FFT: falling-basis coefficients reread as monomial coefficients.
pub fn ifft_poly(p: &BasisPolynomial) -> BasisPolynomial {
    p.convert(Basis::Falling).retag(Basis::Monomial)
}

/// RFT: monomial coefficients reread over the rising-factorial basis.
pub fn rft_poly(p: &BasisPolynomial) -> BasisPolynomial {
    p.convert(Basis::Monomial).retag(Basis::Rising)
}

pub fn irft_poly(p: &BasisPolynomial) -> BasisPolynomial {
    p.convert(Basis::Rising).retag(Basis::Monomial)
}

/// An exact sequence `n -> f(n)` on the nonnegative integers.
pub trait IntegerSequence: Sync {
    fn term(&self, n: u64) -> Rational;
}

impl<F> IntegerSequence for F
where
    F: Fn(u64) -> Rational + Sync,
{
    fn term(&self, n: u64) -> Rational {
        self(n)
    }
}

impl IntegerSequence for BasisPolynomial {
    fn term(&self, n: u64) -> Rational {
        self.eval(&int(n as i64))
    }
}

fn binom(n: u64, k: u64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n as usize, k as usize)))
}

/// `BT(f)(x) = sum_{n<=x} C(x,n) f(n)` at a nonnegative integer.
pub fn binomial_transform(f: &dyn IntegerSequence, x: u64) -> Rational {
    (0..=x).fold(Rational::zero(), |acc, n| acc + binom(x, n) * f.term(n))
}

/// `BT⁻¹(f)(x) = sum_{n<=x} C(x,n) (-1)^(x-n) f(n)`.
pub fn inverse_binomial_transform(f: &dyn IntegerSequence, x: u64) -> Rational {
    (0..=x).fold(Rational::zero(), |acc, n| {
        let t = binom(x, n) * f.term(n);
        if (x - n) % 2 == 1 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// `conv(f,g)(x) = sum_{n<=x} C(x,n) f(x-n) g(n)`.
pub fn binomial_convolution(f: &dyn IntegerSequence, g: &dyn IntegerSequence, x: u64) -> Rational {
    (0..=x).fold(Rational::zero(), |acc, n| {
        acc + binom(x, n) * f.term(x - n) * g.term(n)
    })
}

fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n).into())
}

/// Coefficients `f(0)/0!, f(1)/1!, ...` of the exponential generating function.
pub fn egf_coeffs(f: &dyn IntegerSequence, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| f.term(k as u64) / factorial_q(k))
        .collect()
}

/// `h_k = k! [x^k] (EGF(F) * EGF(G))` for `k < len`, by series multiplication.
pub fn egf_product_coeffs(
    f: &dyn IntegerSequence,
    g: &dyn IntegerSequence,
    len: usize,
) -> Vec<Rational> {
    let prod = series::mul(&egf_coeffs(f, len), &egf_coeffs(g, len), len);
    prod.into_iter()
        .enumerate()
        .map(|(k, c)| c * factorial_q(k))
        .collect()
}

/// `k! [x^k] EGF(F)^(n+1)`: the n-fold iterated binomial self-convolution.
pub fn egf_power_coeffs(f: &dyn IntegerSequence, n: usize, len: usize) -> Vec<Rational> {
    let base = egf_coeffs(f, len);
    series::pow(&base, n + 1, len)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * factorial_q(k))
        .collect()
}

/// n-fold `conv(f, conv(f, ... f))` at `x`, computed by direct summation.
pub fn iterated_convolution(f: &dyn IntegerSequence, n: usize, x: u64) -> Rational {
    let mut values: Vec<Rational> = (0..=x).map(|k| f.term(k)).collect();
    for _ in 0..n {
        let prev = values.clone();
        let prev_seq = move |k: u64| prev[k as usize].clone();
        values = (0..=x)
            .map(|k| binomial_convolution(f, &prev_seq, k))
            .collect();
    }
    values[x as usize].clone()
}

/// `FFT⁻¹(f g)` via `sum_k ∂^k F ∂^k G x^k / k!` with `F = FFT⁻¹ f`, `G = FFT⁻¹ g`.
pub fn hadamard_ifft(f: &BasisPolynomial, g: &BasisPolynomial) -> BasisPolynomial {
    let mut big_f = ifft_poly(f);
    let mut big_g = ifft_poly(g);
    let mut acc = BasisPolynomial::zero(Basis::Monomial);
    let mut k = 0usize;
    while !big_f.is_zero() && !big_g.is_zero() {
        let x_k = BasisPolynomial::basis_element(Basis::Monomial, k).scale(&factorial_q(k).recip());
        let term = big_f
            .multiply(&big_g)
            .and_then(|fg| fg.multiply(&x_k))
            .expect("monomial operands");
        acc = &acc + &term;
        big_f = big_f.derivative();
        big_g = big_g.derivative();
        k += 1;
    }
    acc
}

/// Value at the nonnegative integer `m` of the FFT of the power series with
/// coefficients `coeffs`: `sum_{n<=m} (m)_n c_n`. Finite and exact.
pub fn fft_series_at(coeffs: &dyn IntegerSequence, m: u64) -> Rational {
    let m_q = int(m as i64);
    (0..=m).fold(Rational::zero(), |acc, n| {
        acc + falling_factorial(&m_q, n as i64).expect("nonnegative index") * coeffs.term(n)
    })
}

/// n-th Taylor coefficient recovered through `a(n) = FFT(e^{-x} f)(n) / n!`.
///
/// `taylor` supplies the power-series coefficients of `f`; only the first
/// `n + 1` are read.
pub fn coefficient_extract(taylor: &dyn IntegerSequence, n: u64) -> Rational {
    let len = n as usize + 1;
    let f: Vec<Rational> = (0..len).map(|k| taylor.term(k as u64)).collect();
    let damped = series::mul(&series::exp(&int(-1), len), &f, len);
    let damped_seq = move |k: u64| damped[k as usize].clone();
    fft_series_at(&damped_seq, n) / factorial_q(n as usize)
}

/// Taylor coefficients of a polynomial as an [`IntegerSequence`] (zero past the degree).
pub fn taylor_of(p: &BasisPolynomial) -> impl Fn(u64) -> Rational + Sync + '_ {
    let mono = p.convert(Basis::Monomial);
    move |k| mono.coeff(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use crate::special::touchard;

    fn mono(c: &[i64]) -> BasisPolynomial {
        BasisPolynomial::from_ints(Basis::Monomial, c)
    }

    fn fall(c: &[i64]) -> BasisPolynomial {
        BasisPolynomial::from_ints(Basis::Falling, c)
    }

    #[test]
    fn fft_examples() {
        assert_eq!(fft_poly(&mono(&[0, 0, 1])), fall(&[0, 0, 1]));
        assert_eq!(fft_poly(&mono(&[1])), fall(&[1]));
        assert_eq!(fft_poly(&touchard(2)).convert(Basis::Monomial), mono(&[0, 0, 1]));
    }

    #[test]
    fn ifft_examples() {
        assert_eq!(ifft_poly(&fall(&[0, 0, 1])), mono(&[0, 0, 1]));
        for n in 0..8 {
            assert_eq!(ifft_poly(&BasisPolynomial::basis_element(Basis::Monomial, n)), touchard(n));
        }
        assert!(ifft_poly(&BasisPolynomial::zero(Basis::Falling)).is_zero());
    }

    #[test]
    fn rft_examples() {
        assert_eq!(rft_poly(&mono(&[0, 0, 1])).convert(Basis::Monomial), mono(&[0, 1, 1]));
        assert_eq!(rft_poly(&mono(&[1])).convert(Basis::Monomial), mono(&[1]));
        let r1 = BasisPolynomial::from_ints(Basis::Rising, &[0, 1]);
        assert_eq!(irft_poly(&r1), mono(&[0, 1]));
    }

    #[test]
    fn binomial_transform_examples() {
        let one = |_: u64| int(1);
        let id = |n: u64| int(n as i64);
        let delta = |n: u64| int(i64::from(n == 0));
        assert_eq!(binomial_transform(&one, 3), int(8));
        assert_eq!(binomial_transform(&id, 3), int(12));
        for x in 0..6 {
            assert_eq!(binomial_transform(&delta, x), int(1));
        }
    }

    #[test]
    fn inverse_binomial_transform_examples() {
        let pow2 = |n: u64| int(1i64 << n);
        assert_eq!(inverse_binomial_transform(&pow2, 3), int(1));
        let c = |_: u64| frac(7, 3);
        for x in 1..6 {
            assert_eq!(inverse_binomial_transform(&c, x), int(0));
        }
        let sq = |n: u64| int((n * n) as i64);
        for k in 0..=10 {
            let bt: Vec<Rational> = (0..=k).map(|x| binomial_transform(&sq, x)).collect();
            let bt_seq = move |x: u64| bt[x as usize].clone();
            assert_eq!(inverse_binomial_transform(&bt_seq, k), int((k * k) as i64));
        }
    }

    #[test]
    fn convolution_examples() {
        let one = |_: u64| int(1);
        assert_eq!(binomial_convolution(&one, &one, 3), int(8));
        let pow1 = |_: u64| int(1);
        let pow2 = |n: u64| int(1i64 << n);
        assert_eq!(binomial_convolution(&pow1, &pow2, 4), int(81));
        let delta = |n: u64| int(i64::from(n == 0));
        let f = |n: u64| frac(n as i64 * 3 - 1, 2);
        for x in 0..6 {
            assert_eq!(binomial_convolution(&f, &delta, x), f(x));
            assert_eq!(binomial_convolution(&f, &pow2, x), binomial_convolution(&pow2, &f, x));
        }
    }

    #[test]
    fn egf_examples() {
        let one = |_: u64| int(1);
        let id = |n: u64| int(n as i64);
        assert_eq!(egf_product_coeffs(&one, &one, 4), vec![int(1), int(2), int(4), int(8)]);
        assert_eq!(egf_product_coeffs(&id, &one, 4), vec![int(0), int(1), int(4), int(12)]);
        assert_eq!(egf_power_coeffs(&one, 2, 4)[3], int(27));
        assert_eq!(iterated_convolution(&one, 2, 3), int(27));
    }

    #[test]
    fn hadamard_examples() {
        let x = mono(&[0, 1]);
        assert_eq!(hadamard_ifft(&x, &x), touchard(2));
        let f = mono(&[2, -1, 3]);
        assert_eq!(hadamard_ifft(&f, &mono(&[1])), ifft_poly(&f));
        let (f2, f1) = (fall(&[0, 0, 1]), fall(&[0, 1]));
        assert_eq!(hadamard_ifft(&f2, &f1), ifft_poly(&f2.multiply(&f1).unwrap()));
    }

    #[test]
    fn coefficient_extract_examples() {
        let exp = |k: u64| factorial_q(k as usize).recip();
        assert_eq!(coefficient_extract(&exp, 2), frac(1, 2));
        let p = mono(&[3, 0, 1]);
        assert_eq!(coefficient_extract(&taylor_of(&p), 0), int(3));
        let geometric = |_: u64| int(1);
        assert_eq!(coefficient_extract(&geometric, 5), int(1));
    }

    #[test]
    fn fft_series_at_of_power_times_exp() {
        // FFT(x^s e^{-x}) at integer m is s! [m = s]
        for s in 0..6u64 {
            let c = move |n: u64| {
                if n < s {
                    int(0)
                } else {
                    let sign = if (n - s).is_multiple_of(2) { 1 } else { -1 };
                    int(sign) / factorial_q((n - s) as usize)
                }
            };
            for m in 0..8u64 {
                let expected = if m == s { factorial_q(s as usize) } else { Rational::zero() };
                assert_eq!(fft_series_at(&c, m), expected);
            }
        }
    }
}

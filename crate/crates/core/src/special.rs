//! Named polynomial families: Touchard `T_n`, the falling-basis family
//! `Z_n = FFT((x)_n)`, generalized Laguerre and Charlier polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{
    binomial, binomial_general, factorial, stirling_first_signed, stirling_second_row,
};
use crate::error::{Error, Result};
use crate::polynomial::{Basis, BasisPolynomial};
use crate::scalar::{int, Rational};

/// `T_n(x) = sum_k S(n,k) x^k`, in the monomial basis.
pub fn touchard(n: usize) -> BasisPolynomial {
    let coeffs = stirling_second_row(n)
        .iter()
        .map(|s| Rational::from_integer(BigInt::from(s.clone())))
        .collect();
    BasisPolynomial::new(Basis::Monomial, coeffs)
}

/// `Z_n(x) = sum_k s(n,k) (x)_k` with signed first-kind Stirling numbers.
pub fn z_poly(n: usize) -> BasisPolynomial {
    let coeffs = (0..=n)
        .map(|k| Rational::from_integer(stirling_first_signed(n, k)))
        .collect();
    BasisPolynomial::new(Basis::Falling, coeffs)
}

/// `L_n^(alpha)(y) = sum_k C(n+alpha, n-k) (-y)^k / k!`, valid for any rational `alpha`.
pub fn laguerre(n: usize, alpha: &Rational) -> BasisPolynomial {
    let upper = alpha + int(n as i64);
    let coeffs = (0..=n)
        .map(|k| {
            let c = binomial_general(&upper, n - k)
                / Rational::from_integer(factorial(k).into());
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    BasisPolynomial::new(Basis::Monomial, coeffs)
}

/// Charlier polynomial `c_n(x, a) = sum_k C(n,k) C(x,k) k! (-a)^(-k)`.
pub fn charlier(n: usize, x: &Rational, a: &Rational) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    let step = -a.recip();
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for k in 0..=n {
        let c = Rational::from_integer(BigInt::from(binomial(n, k) * factorial(k)));
        acc += c * binomial_general(x, k) * &power;
        power *= &step;
    }
    Ok(acc)
}

/// Floating-point Charlier value, same normalization as [`charlier`].
pub fn charlier_f64(n: usize, x: f64, a: f64) -> f64 {
    // sum_k C(n,k) (x)_k (-1/a)^k
    let mut acc = 0.0;
    let mut term = 1.0;
    for k in 0..=n {
        acc += term;
        term *= (n - k) as f64 / (k + 1) as f64 * (x - k as f64) * (-1.0 / a);
    }
    acc
}

/// Partial sum `sum_{k<K} a^k/k! c_n(k,a) c_m(k,a)` of the Poisson-weighted
/// orthogonality relation.
pub fn charlier_orthogonality_sum(n: usize, m: usize, a: f64, terms: usize) -> f64 {
    let mut weight = 1.0;
    let mut acc = 0.0;
    for k in 0..terms {
        let x = k as f64;
        acc += weight * charlier_f64(n, x, a) * charlier_f64(m, x, a);
        weight *= a / (k + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn mono(c: &[i64]) -> BasisPolynomial {
        BasisPolynomial::from_ints(Basis::Monomial, c)
    }

    #[test]
    fn touchard_examples() {
        assert_eq!(touchard(0), mono(&[1]));
        assert_eq!(touchard(2), mono(&[0, 1, 1]));
        assert_eq!(touchard(3), mono(&[0, 1, 3, 1]));
    }

    #[test]
    fn touchard_recurrence() {
        // T_{n+1}(x) = x sum_k C(n,k) T_k(x)
        let x = mono(&[0, 1]);
        for n in 0..=10 {
            let mut sum = BasisPolynomial::zero(Basis::Monomial);
            for k in 0..=n {
                let c = Rational::from_integer(binomial(n, k).into());
                sum = &sum + &touchard(k).scale(&c);
            }
            assert_eq!(touchard(n + 1), x.multiply(&sum).unwrap(), "n={n}");
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_poly(0), BasisPolynomial::from_ints(Basis::Falling, &[1]));
        assert_eq!(z_poly(2), BasisPolynomial::from_ints(Basis::Falling, &[0, -1, 1]));
        assert_eq!(z_poly(3), BasisPolynomial::from_ints(Basis::Falling, &[0, 2, -3, 1]));
    }

    #[test]
    fn laguerre_examples() {
        let alpha = frac(3, 7);
        assert_eq!(laguerre(0, &alpha), mono(&[1]));
        assert_eq!(
            laguerre(1, &alpha),
            BasisPolynomial::new(Basis::Monomial, vec![alpha.clone() + int(1), int(-1)])
        );
        assert_eq!(
            laguerre(2, &int(0)),
            BasisPolynomial::new(Basis::Monomial, vec![int(1), int(-2), frac(1, 2)])
        );
    }

    #[test]
    fn charlier_examples() {
        let (x, a) = (frac(5, 3), frac(-2, 7));
        assert_eq!(charlier(0, &x, &a).unwrap(), int(1));
        assert_eq!(charlier(1, &x, &a).unwrap(), int(1) - x.clone() / a.clone());
        // (-a)^n c_n(x,-a) with n=2, a=1, x=3
        assert_eq!(charlier(2, &int(3), &int(-1)).unwrap(), int(13));
        assert_eq!(charlier(3, &x, &int(0)), Err(Error::ZeroParameter("a")));
        let exact = crate::scalar::to_f64(&charlier(3, &frac(5, 2), &frac(3, 4)).unwrap());
        assert!((charlier_f64(3, 2.5, 0.75) - exact).abs() < 1e-12);
    }

    #[test]
    fn orthogonality_examples() {
        let e = std::f64::consts::E;
        assert!((charlier_orthogonality_sum(0, 0, 1.0, 60) - e).abs() < 1e-10);
        assert!(charlier_orthogonality_sum(1, 2, 1.0, 60).abs() < 1e-8);
        assert!((charlier_orthogonality_sum(2, 2, 1.0, 60) - 2.0 * e).abs() < 1e-8);
    }
}

//! Truncated formal power series over the rationals.
//!
//! A series is a coefficient vector `c[0] + c[1] t + ...`; every routine takes
//! the number of coefficients to keep.

use num_traits::{One, Zero};

use crate::combinatorics::{binomial_general, factorial};
use crate::scalar::{int, Rational};

pub fn mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1 / a`; panics when `a[0] == 0`.
pub fn reciprocal(a: &[Rational], len: usize) -> Vec<Rational> {
    assert!(
        a.first().is_some_and(|c| !c.is_zero()),
        "series reciprocal needs a nonzero constant term"
    );
    let inv0 = a[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(inv0.clone());
            continue;
        }
        let mut acc = Rational::zero();
        for k in 1..=n.min(a.len() - 1) {
            acc += &a[k] * &out[n - k];
        }
        out.push(-acc * &inv0);
    }
    out
}

pub fn div(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    mul(num, &reciprocal(den, len), len)
}

pub fn pow(a: &[Rational], k: usize, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    if len > 0 {
        out[0] = Rational::one();
    }
    for _ in 0..k {
        out = mul(&out, a, len);
    }
    out
}

/// `exp(c t)`.
pub fn exp(c: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for n in 0..len {
        out.push(term.clone());
        term = term * c / int(n as i64 + 1);
    }
    out
}

/// `exp(t) - 1`.
pub fn expm1(len: usize) -> Vec<Rational> {
    let mut out = exp(&Rational::one(), len);
    if len > 0 {
        out[0] = Rational::zero();
    }
    out
}

/// `log(1 + t)`.
pub fn log1p(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| match j {
            0 => Rational::zero(),
            _ if j % 2 == 1 => Rational::new(1.into(), (j as i64).into()),
            _ => Rational::new((-1).into(), (j as i64).into()),
        })
        .collect()
}

/// `(1 + t)^a` for rational `a`.
pub fn binomial(a: &Rational, len: usize) -> Vec<Rational> {
    (0..len).map(|j| binomial_general(a, j)).collect()
}

/// `t / (exp(t) - 1)`, whose coefficients are `B_n / n!`.
pub fn bernoulli_generating(len: usize) -> Vec<Rational> {
    // (exp(t) - 1)/t = sum t^k/(k+1)!
    let den: Vec<Rational> = (0..len)
        .map(|k| Rational::from_integer(factorial(k + 1).into()).recip())
        .collect();
    reciprocal(&den, len)
}

/// `t / log(1 + t)`.
pub fn gregory_generating(len: usize) -> Vec<Rational> {
    let den: Vec<Rational> = log1p(len + 1).into_iter().skip(1).collect();
    reciprocal(&den, len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bernoulli;
    use crate::scalar::frac;

    #[test]
    fn reciprocal_of_geometric() {
        let a = vec![int(1), int(-1)];
        assert_eq!(reciprocal(&a, 5), vec![int(1); 5]);
    }

    #[test]
    fn log_of_exp_is_identity() {
        // log(1 + (e^t - 1)) = t, composed termwise
        let e = expm1(8);
        let l = log1p(8);
        let mut comp = vec![Rational::zero(); 8];
        for (j, c) in l.iter().enumerate() {
            let p = pow(&e, j, 8);
            for (i, v) in p.iter().enumerate() {
                comp[i] += c * v;
            }
        }
        let mut expected = vec![Rational::zero(); 8];
        expected[1] = int(1);
        assert_eq!(comp, expected);
    }

    #[test]
    fn bernoulli_series_coefficients() {
        let g = bernoulli_generating(14);
        for (n, c) in g.iter().enumerate() {
            let expected = bernoulli(n) / Rational::from_integer(factorial(n).into());
            assert_eq!(c, &expected, "n={n}");
        }
    }

    #[test]
    fn gregory_coefficients() {
        let g = gregory_generating(4);
        assert_eq!(g, vec![int(1), frac(1, 2), frac(-1, 12), frac(1, 24)]);
    }
}

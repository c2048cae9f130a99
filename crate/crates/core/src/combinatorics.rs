//! Exact combinatorial numbers: Stirling numbers of both kinds, binomials,
//! Pochhammer symbols and Bernoulli numbers.
//!
//! The Stirling triangles and the Bernoulli sequence are memoized in
//! process-wide tables that grow on demand. Rows are published whole behind
//! an `RwLock`, so readers never observe a partially computed row.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational, Scalar};

type Row = Arc<Vec<BigUint>>;

struct Triangle {
    rows: RwLock<Vec<Row>>,
    next_row: fn(usize, &[BigUint]) -> Vec<BigUint>,
}

impl Triangle {
    fn new(next_row: fn(usize, &[BigUint]) -> Vec<BigUint>) -> Self {
        Triangle {
            rows: RwLock::new(vec![Arc::new(vec![BigUint::one()])]),
            next_row,
        }
    }

    fn row(&self, n: usize) -> Row {
        if let Some(row) = self.rows.read().unwrap().get(n) {
            return row.clone();
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let m = rows.len() - 1;
            let next = (self.next_row)(m, &rows[m]);
            rows.push(Arc::new(next));
        }
        rows[n].clone()
    }
}

/// Row n+1 of the unsigned first-kind triangle: c(n+1,k) = c(n,k-1) + n c(n,k).
fn next_stirling_first(n: usize, prev: &[BigUint]) -> Vec<BigUint> {
    (0..=n + 1)
        .map(|k| {
            let mut v = BigUint::zero();
            if k >= 1 {
                v += &prev[k - 1];
            }
            if k <= n {
                v += &prev[k] * BigUint::from(n);
            }
            v
        })
        .collect()
}

/// Row n+1 of the second-kind triangle: S(n+1,k) = k S(n,k) + S(n,k-1).
fn next_stirling_second(n: usize, prev: &[BigUint]) -> Vec<BigUint> {
    (0..=n + 1)
        .map(|k| {
            let mut v = BigUint::zero();
            if k >= 1 {
                v += &prev[k - 1];
            }
            if k <= n {
                v += &prev[k] * BigUint::from(k);
            }
            v
        })
        .collect()
}

static STIRLING_FIRST: LazyLock<Triangle> = LazyLock::new(|| Triangle::new(next_stirling_first));
static STIRLING_SECOND: LazyLock<Triangle> =
    LazyLock::new(|| Triangle::new(next_stirling_second));
static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::one()]));

/// Unsigned Stirling numbers of the first kind, row `n` (indices `0..=n`).
pub fn stirling_first_row(n: usize) -> Arc<Vec<BigUint>> {
    STIRLING_FIRST.row(n)
}

/// Stirling numbers of the second kind, row `n`.
pub fn stirling_second_row(n: usize) -> Arc<Vec<BigUint>> {
    STIRLING_SECOND.row(n)
}

pub fn stirling_first_unsigned(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling_first_row(n)[k].clone()
}

/// Signed first-kind number `(-1)^(n-k) c(n,k)`, the coefficient of `x^k` in `(x)_n`.
pub fn stirling_first_signed(n: usize, k: usize) -> BigInt {
    let v = BigInt::from(stirling_first_unsigned(n, k));
    if (n + k) % 2 == 1 {
        -v
    } else {
        v
    }
}

pub fn stirling_second(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling_second_row(n)[k].clone()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Generalized binomial `x (x-1) ... (x-n+1) / n!` for rational upper argument.
pub fn binomial_general(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc = acc * (x - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// Falling factorial `(x)_n`.
///
/// For `n >= 0` this is `x (x-1) ... (x-n+1)`; for `n < 0` it is
/// `1 / ((x+1)(x+2)...(x+|n|))`, the extension for which
/// `(x)_n (x-n)_m = (x)_(n+m)` holds for all integers.
pub fn falling_factorial<T: Scalar>(x: &T, n: i64) -> Result<T> {
    if n >= 0 {
        let mut acc = T::one();
        for i in 0..n {
            acc = acc * (x.clone() - T::from_int(i));
        }
        Ok(acc)
    } else {
        let mut denom = T::one();
        for i in 1..=-n {
            let factor = x.clone() + T::from_int(i);
            if factor.is_zero() {
                return Err(Error::DivisionByZero(format!(
                    "falling factorial of {x:?} with index {n}"
                )));
            }
            denom = denom * factor;
        }
        Ok(denom.inverse())
    }
}

/// Rising factorial `x^(n)`; negative indices give `1 / ((x-1)...(x-|n|))`.
pub fn rising_factorial<T: Scalar>(x: &T, n: i64) -> Result<T> {
    if n >= 0 {
        let mut acc = T::one();
        for i in 0..n {
            acc = acc * (x.clone() + T::from_int(i));
        }
        Ok(acc)
    } else {
        let mut denom = T::one();
        for i in 1..=-n {
            let factor = x.clone() - T::from_int(i);
            if factor.is_zero() {
                return Err(Error::DivisionByZero(format!(
                    "rising factorial of {x:?} with index {n}"
                )));
            }
            denom = denom * factor;
        }
        Ok(denom.inverse())
    }
}

/// Bernoulli number with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + Rational::from_integer(BigInt::from(binomial(m + 1, k))) * b
            });
        table.push(-sum / int(m as i64 + 1));
    }
    table[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use proptest::prelude::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first_unsigned(0, 0), u(1));
        assert_eq!(stirling_first_unsigned(3, 2), u(3));
        assert_eq!(stirling_first_unsigned(3, 1), u(2));
        assert_eq!(stirling_first_unsigned(2, 5), u(0));
        assert_eq!(stirling_second(4, 4), u(1));
        assert_eq!(stirling_second(3, 2), u(3));
        assert_eq!(stirling_second(4, 2), u(7));
        assert_eq!(stirling_second(3, 4), u(0));
    }

    #[test]
    fn stirling_first_matches_expanded_product() {
        // brute-force expansion of x(x-1)...(x-n+1)
        for n in 0..12usize {
            let mut poly = vec![BigInt::one()];
            for i in 0..n {
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * BigInt::from(i);
                }
                poly = next;
            }
            for (k, c) in poly.iter().enumerate() {
                assert_eq!(&stirling_first_signed(n, k), c, "s({n},{k})");
            }
        }
    }

    #[test]
    fn stirling_second_counts_partitions() {
        // S(n,k) by enumerating restricted growth strings
        fn count(n: usize, k: usize) -> u64 {
            fn rec(i: usize, n: usize, max: usize, k: usize) -> u64 {
                if i == n {
                    return u64::from(max == k);
                }
                (0..=max.min(k - 1))
                    .map(|b| rec(i + 1, n, max.max(b + 1), k))
                    .sum()
            }
            if k == 0 {
                return u64::from(n == 0);
            }
            rec(0, n, 0, k)
        }
        for n in 0..9 {
            for k in 0..=n {
                assert_eq!(stirling_second(n, k), u(count(n, k)), "S({n},{k})");
            }
        }
    }

    #[test]
    fn stirling_matrices_are_inverse() {
        for n in 0..=30 {
            for m in 0..=30 {
                let sum: BigInt = (0..=30)
                    .map(|k| stirling_first_signed(n, k) * BigInt::from(stirling_second(k, m)))
                    .sum();
                assert_eq!(sum, BigInt::from(u8::from(n == m)), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn general_binomial_examples() {
        assert_eq!(binomial_general(&int(5), 2), int(10));
        assert_eq!(binomial_general(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binomial_general(&int(3), 5), int(0));
        assert_eq!(binomial(10, 3), u(120));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(falling_factorial(&int(5), 3).unwrap(), int(60));
        assert_eq!(falling_factorial(&frac(7, 3), 0).unwrap(), int(1));
        assert_eq!(falling_factorial(&int(1), -1).unwrap(), frac(1, 2));
        assert!(falling_factorial(&int(-2), -3).is_err());
        assert_eq!(rising_factorial(&int(2), 3).unwrap(), int(24));
        assert_eq!(rising_factorial(&frac(7, 3), 0).unwrap(), int(1));
        assert_eq!(rising_factorial(&1.5f64, 2).unwrap(), 3.75);
        assert!(rising_factorial(&2.0f64, -2).is_err());
        // (k)_{-n} = k!/(k+n)!
        assert_eq!(falling_factorial(&int(3), -2).unwrap(), frac(6, 120));
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), frac(-1, 2));
        assert_eq!(bernoulli(2), frac(1, 6));
        assert_eq!(bernoulli(4), frac(-1, 30));
        assert_eq!(bernoulli(12), frac(-691, 2730));
        for k in 1..=10 {
            assert_eq!(bernoulli(2 * k + 1), int(0));
        }
    }

    #[test]
    fn concurrent_table_growth() {
        let handles: Vec<_> = (0..8)
            .map(|t| {
                std::thread::spawn(move || {
                    let n = 40 + t * 7;
                    (stirling_second(n, n / 2), bernoulli(n))
                })
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let n = 40 + t * 7;
            let (s, b) = h.join().unwrap();
            assert_eq!(s, stirling_second(n, n / 2));
            assert_eq!(b, bernoulli(n));
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_reflection(x in rational(), n in 0i64..=12) {
            let lhs = rising_factorial(&x, n).unwrap();
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            prop_assert_eq!(lhs, sign * falling_factorial(&-x.clone(), n).unwrap());
        }

        #[test]
        fn index_shift(x in rational(), n in 0i64..=12) {
            prop_assert_eq!(
                falling_factorial(&x, n + 1).unwrap(),
                (x.clone() - int(n)) * falling_factorial(&x, n).unwrap()
            );
            prop_assert_eq!(
                rising_factorial(&x, n + 1).unwrap(),
                (x.clone() + int(n)) * rising_factorial(&x, n).unwrap()
            );
        }

        #[test]
        fn negative_index_inverts(x in rational(), n in 1i64..=8) {
            let shifted = x.clone() - int(n);
            prop_assume!(falling_factorial(&shifted, -n).is_ok());
            prop_assume!(!falling_factorial(&x, n).unwrap().is_zero());
            prop_assert_eq!(
                falling_factorial(&x, n).unwrap() * falling_factorial(&shifted, -n).unwrap(),
                int(1)
            );
        }
    }
}

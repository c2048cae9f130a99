//! Deterministic inputs shared by the benchmarks.

use factorial_transform::scalar::frac;
use factorial_transform::{Basis, BasisPolynomial};

/// A dense polynomial of the given degree with small, varied rational coefficients.
pub fn sample_polynomial(basis: Basis, degree: usize) -> BasisPolynomial {
    let coeffs = (0..=degree as i64).map(|k| frac((k * 7 + 3) % 19 - 9, k % 5 + 1)).collect();
    BasisPolynomial::new(basis, coeffs)
}

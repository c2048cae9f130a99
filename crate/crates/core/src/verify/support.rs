use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::polynomial::{Basis, BasisPolynomial};
use crate::scalar::{frac, to_f64, Rational};

/// Accumulates trial outcomes for a single check.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub trials: usize,
    pub max_abs_error: f64,
    pub mismatches: usize,
    pub first_failure: Option<String>,
    pub note: Option<String>,
    tolerance: Option<f64>,
}

impl Tally {
    pub fn numeric(tolerance: f64) -> Self {
        Tally { tolerance: Some(tolerance), ..Default::default() }
    }

    pub fn exact() -> Self {
        Tally::default()
    }

    fn fail(&mut self, context: impl FnOnce() -> String) {
        self.mismatches += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(context());
        }
    }

    pub fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.fail(context);
        }
    }

    pub fn rational(&mut self, got: &Rational, expected: &Rational, context: impl FnOnce() -> String) {
        self.trials += 1;
        if got != expected {
            self.max_abs_error = self.max_abs_error.max(to_f64(&(got - expected)).abs());
            self.fail(|| format!("{}: got {got}, expected {expected}", context()));
        }
    }

    pub fn poly(&mut self, got: &BasisPolynomial, expected: &BasisPolynomial, context: impl FnOnce() -> String) {
        self.trials += 1;
        let diff = &got.convert(expected.basis()) - expected;
        if !diff.is_zero() {
            let worst = diff.coeffs().iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max);
            self.max_abs_error = self.max_abs_error.max(worst);
            self.fail(|| format!("{}: got {got}, expected {expected}", context()));
        }
    }

    /// Records `|got - expected|`; counted as a failure above the tolerance.
    pub fn close(&mut self, got: f64, expected: f64, context: impl FnOnce() -> String) {
        self.trials += 1;
        let err = (got - expected).abs();
        let err = if err.is_nan() { f64::INFINITY } else { err };
        self.max_abs_error = self.max_abs_error.max(err);
        if self.tolerance.is_some_and(|tol| err > tol) {
            self.fail(|| format!("{}: got {got:.15e}, expected {expected:.15e}", context()));
        }
    }

    /// Like [`Tally::close`] with the error measured relative to `max(1, |expected|)`.
    pub fn close_rel(&mut self, got: f64, expected: f64, context: impl FnOnce() -> String) {
        let scale = expected.abs().max(1.0);
        self.close(got / scale, expected / scale, context);
    }
}

pub(crate) fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub(crate) fn random_poly(rng: &mut ChaCha8Rng, basis: Basis, max_degree: usize) -> BasisPolynomial {
    let degree = rng.random_range(0..=max_degree);
    BasisPolynomial::new(basis, (0..=degree).map(|_| random_rational(rng)).collect())
}

pub(crate) fn random_monomial(rng: &mut ChaCha8Rng, max_degree: usize) -> BasisPolynomial {
    random_poly(rng, Basis::Monomial, max_degree)
}

/// `p(-x)` in the monomial basis.
pub(crate) fn negate_argument(p: &BasisPolynomial) -> BasisPolynomial {
    p.scale_argument(&frac(-1, 1))
}

//! Identity checks carried out entirely in rational arithmetic.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::support::{negate_argument, random_monomial, random_poly, random_rational, Tally};
use crate::combinatorics::{binomial, factorial, falling_factorial, stirling_first_signed, stirling_second};
use crate::error::Result;
use crate::exact::{
    binomial_convolution, binomial_transform, coefficient_extract, egf_coeffs, egf_power_coeffs, egf_product_coeffs,
    fft_poly, fft_series_at, hadamard_ifft, ifft_poly, inverse_binomial_transform, irft_poly, iterated_convolution,
    rft_poly, taylor_of,
};
use crate::polynomial::{apply_series, BaseOperator, Basis, BasisPolynomial, OperatorExpr};
use crate::scalar::{frac, int, Rational};
use crate::series;
use crate::special::{charlier, laguerre, touchard, z_poly};

type Check = Result<Tally>;

const SHIFTS: [(i64, i64); 4] = [(2, 1), (-1, 1), (1, 2), (3, 4)];

fn q(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n).into())
}

fn mono(c: &[Rational]) -> BasisPolynomial {
    BasisPolynomial::new(Basis::Monomial, c.to_vec())
}

fn x_power(n: usize) -> BasisPolynomial {
    BasisPolynomial::basis_element(Basis::Monomial, n)
}

fn falling(n: usize) -> BasisPolynomial {
    BasisPolynomial::basis_element(Basis::Falling, n)
}

fn sampled(p: &BasisPolynomial) -> impl Fn(u64) -> Rational + Sync + '_ {
    move |n| p.eval(&int(n as i64))
}

pub(super) fn fft_round_trip(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 20);
        t.poly(&ifft_poly(&fft_poly(&p)), &p, || format!("ifft(fft({p}))"));
        let f = random_poly(rng, Basis::Falling, 20);
        t.poly(&fft_poly(&ifft_poly(&f)), &f, || format!("fft(ifft({f}))"));
    }
    Ok(t)
}

pub(super) fn rft_round_trip(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 20);
        t.poly(&irft_poly(&rft_poly(&p)), &p, || format!("irft(rft({p}))"));
        let r = random_poly(rng, Basis::Rising, 20);
        t.poly(&rft_poly(&irft_poly(&r)), &r, || format!("rft(irft({r}))"));
    }
    Ok(t)
}

pub(super) fn reflection(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 12);
        let lhs = rft_poly(&p);
        let rhs = fft_poly(&negate_argument(&p));
        let r = random_poly(rng, Basis::Rising, 12);
        let inv_lhs = irft_poly(&r);
        let inv_rhs = ifft_poly(&negate_argument(&r).convert(Basis::Falling));
        for _ in 0..10 {
            let x = random_rational(rng);
            let neg = -&x;
            t.rational(&lhs.eval(&x), &rhs.eval(&neg), || format!("rft vs reflected fft of {p} at {x}"));
            t.rational(&inv_lhs.eval(&x), &inv_rhs.eval(&neg), || format!("irft vs reflected ifft of {r} at {x}"));
        }
    }
    Ok(t)
}

pub(super) fn linearity(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let (p, g) = (random_monomial(rng, 10), random_monomial(rng, 10));
        let (a, b) = (random_rational(rng), random_rational(rng));
        let combo = &(&p * &a) + &(&g * &b);
        t.poly(&fft_poly(&combo), &(&(&fft_poly(&p) * &a) + &(&fft_poly(&g) * &b)), || format!("fft linearity {p}, {g}"));
        let (f1, f2) = (random_poly(rng, Basis::Falling, 10), random_poly(rng, Basis::Falling, 10));
        let combo = &(&f1 * &a) + &(&f2 * &b);
        t.poly(&ifft_poly(&combo), &(&(&ifft_poly(&f1) * &a) + &(&ifft_poly(&f2) * &b)), || format!("ifft linearity {f1}, {f2}"));
    }
    Ok(t)
}

pub(super) fn basis_commutation(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=10 {
        for k in 0..=4 {
            let lhs = fft_poly(&x_power(n).apply(&OperatorExpr::Derivative(k)));
            let rhs = falling(n).apply(&OperatorExpr::ForwardDifference(k));
            t.poly(&lhs, &rhs, || format!("fft(d^{k} x^{n})"));
            let lhs = ifft_poly(&falling(n).apply(&OperatorExpr::ForwardDifference(k)));
            let rhs = x_power(n).apply(&OperatorExpr::Derivative(k));
            t.poly(&lhs, &rhs, || format!("ifft(Δ^{k} (x)_{n})"));
        }
    }
    Ok(t)
}

fn commutation(
    rng: &mut ChaCha8Rng,
    trials: usize,
    source_basis: Basis,
    inside: fn(usize) -> OperatorExpr,
    outside: fn(usize) -> OperatorExpr,
    transform: fn(&BasisPolynomial) -> BasisPolynomial,
) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_poly(rng, source_basis, 10);
        for k in 0..=3 {
            let lhs = transform(&p.apply(&inside(k)));
            let rhs = transform(&p).apply(&outside(k));
            t.poly(&lhs, &rhs, || format!("k = {k}, p = {p}"));
        }
    }
    Ok(t)
}

pub(super) fn fft_derivative(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    commutation(rng, trials, Basis::Monomial, OperatorExpr::Derivative, OperatorExpr::ForwardDifference, fft_poly)
}

pub(super) fn ifft_difference(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    commutation(rng, trials, Basis::Falling, OperatorExpr::ForwardDifference, OperatorExpr::Derivative, ifft_poly)
}

pub(super) fn ifft_log_derivative(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    commutation(rng, trials, Basis::Falling, OperatorExpr::Derivative, OperatorExpr::Log1pDerivative, ifft_poly)
}

pub(super) fn fft_exp_difference(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    commutation(rng, trials, Basis::Monomial, OperatorExpr::ForwardDifference, OperatorExpr::ExpDifferenceMinusOne, fft_poly)
}

fn is_constant(p: &BasisPolynomial) -> bool {
    p.degree().is_none_or(|d| d == 0)
}

pub(super) fn integration_summation(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 10);
        let f = random_poly(rng, Basis::Falling, 10);
        let len = 13;

        let d = &fft_poly(&p.antiderivative()) - &fft_poly(&p).indefinite_sum();
        t.check(is_constant(&d), || format!("fft(∂⁻¹p) - Δ⁻¹fft(p) = {d} for p = {p}"));

        let d = &ifft_poly(&f.indefinite_sum()) - &ifft_poly(&f).antiderivative();
        t.check(is_constant(&d), || format!("ifft(Δ⁻¹f) - ∂⁻¹ifft(f) = {d} for f = {f}"));

        // (log(1+∂))⁻¹ = ∂⁻¹ ∘ ∂/log(1+∂)
        let g = ifft_poly(&p.convert(Basis::Falling).antiderivative());
        let inv_log = apply_series(BaseOperator::Derivative, &series::gregory_generating(len), &ifft_poly(&p.convert(Basis::Falling))).antiderivative();
        let d = &g - &inv_log;
        t.check(is_constant(&d), || format!("ifft(∂⁻¹p) - (log(1+∂))⁻¹ifft(p) = {d}"));

        // (e^Δ-1)⁻¹ = Δ⁻¹ ∘ Δ/(e^Δ-1)
        let h = fft_poly(&p.indefinite_sum());
        let inv_exp = apply_series(BaseOperator::ForwardDifference, &series::bernoulli_generating(len), &fft_poly(&p)).indefinite_sum();
        let d = &h - &inv_exp;
        t.check(is_constant(&d), || format!("fft(Δ⁻¹p) - (e^Δ-1)⁻¹fft(p) = {d}"));
    }
    Ok(t)
}

pub(super) fn operator_expansion(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let zero = Rational::zero();
    for _ in 0..trials {
        let p = random_monomial(rng, 10);
        let f = random_poly(rng, Basis::Falling, 10);
        let transformed = fft_poly(&p).convert(Basis::Monomial);
        let inverse = ifft_poly(&f).convert(Basis::Falling);
        for k in 0..=11 {
            let expected = p.apply(&OperatorExpr::Log1pDerivative(k)).eval(&zero) / fact(k);
            t.rational(&transformed.coeff(k), &expected, || format!("monomial coefficient {k} of FFT({p})"));
            let expected = f.apply(&OperatorExpr::ExpDifferenceMinusOne(k)).eval(&zero) / fact(k);
            t.rational(&inverse.coeff(k), &expected, || format!("falling coefficient {k} of FFT⁻¹({f})"));
        }
    }
    Ok(t)
}

pub(super) fn touchard_z_operators(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=10usize {
        for k in 0..=4usize {
            let scale = falling_factorial(&q(n), k as i64)?;
            let expected_t = if k <= n { touchard(n - k).scale(&scale) } else { BasisPolynomial::zero(Basis::Monomial) };
            t.poly(&touchard(n).apply(&OperatorExpr::Log1pDerivative(k)), &expected_t, || format!("(log(1+∂))^{k} T_{n}"));
            let expected_z = if k <= n { z_poly(n - k).scale(&scale) } else { BasisPolynomial::zero(Basis::Falling) };
            t.poly(&z_poly(n).apply(&OperatorExpr::ExpDifferenceMinusOne(k)), &expected_z, || format!("(e^Δ-1)^{k} Z_{n}"));
        }
    }
    Ok(t)
}

const CENTERS: [(i64, i64); 4] = [(0, 1), (1, 1), (-2, 1), (1, 2)];

fn series_reconstruction(
    rng: &mut ChaCha8Rng,
    trials: usize,
    op: fn(usize) -> OperatorExpr,
    family: fn(usize) -> BasisPolynomial,
) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let f = random_monomial(rng, 10);
        for (a, b) in CENTERS {
            let x0 = frac(a, b);
            let top = f.degree().unwrap_or(0);
            let mut acc = BasisPolynomial::zero(Basis::Monomial);
            for k in 0..=top {
                let c = f.apply(&op(k)).eval(&x0) / fact(k);
                acc = &acc + &family(k).convert(Basis::Monomial).shift(&-&x0).scale(&c);
            }
            t.poly(&acc, &f, || format!("expansion of {f} about {x0}"));
        }
    }
    Ok(t)
}

pub(super) fn touchard_series(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    series_reconstruction(rng, trials, OperatorExpr::Log1pDerivative, touchard)
}

pub(super) fn z_series(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    series_reconstruction(rng, trials, OperatorExpr::ExpDifferenceMinusOne, z_poly)
}

pub(super) fn shifting(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        let f = random_poly(rng, Basis::Falling, 8);
        for (a, b) in SHIFTS {
            let a = frac(a, b);
            t.poly(&fft_poly(&p.shift(&a)), &fft_poly(&p).apply(&OperatorExpr::ExpDifference(a.clone())), || format!("fft(p(x+{a})), p = {p}"));
            t.poly(&ifft_poly(&f.shift(&a)), &ifft_poly(&f).apply(&OperatorExpr::BinomialDerivative(a.clone())), || format!("ifft(f(x+{a})), f = {f}"));
            t.poly(&fft_poly(&p).apply(&OperatorExpr::Shift(a.clone())), &fft_poly(&p).shift(&a), || format!("(1+Δ)^{a} fft({p})"));
            t.poly(&ifft_poly(&f).apply(&OperatorExpr::ExpDerivative(a.clone())), &ifft_poly(&f).shift(&a), || format!("e^({a}∂) ifft({f})"));
        }
    }
    Ok(t)
}

/// `(x + a)^n` in the monomial basis.
fn binomial_power(a: &Rational, n: usize) -> BasisPolynomial {
    (0..n).fold(BasisPolynomial::constant(Basis::Monomial, int(1)), |acc, _| {
        acc.multiply(&mono(&[a.clone(), int(1)])).expect("monomial operands")
    })
}

/// `(x + a)_n` in the monomial basis.
fn shifted_falling(a: &Rational, n: usize) -> BasisPolynomial {
    (0..n).fold(BasisPolynomial::constant(Basis::Monomial, int(1)), |acc, j| {
        acc.multiply(&mono(&[a - int(j as i64), int(1)])).expect("monomial operands")
    })
}

pub(super) fn charlier_shift(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let n = rng.random_range(0..=8usize);
        let (x, mut a) = (random_rational(rng), random_rational(rng));
        if a.is_zero() {
            a = int(1);
        }
        let lhs = fft_poly(&binomial_power(&a, n)).eval(&x);
        let lag = laguerre(n, &(&x - q(n))).eval(&-&a) * fact(n);
        let ch = num_traits::pow(a.clone(), n) * charlier(n, &x, &-&a)?;
        t.rational(&lhs, &lag, || format!("fft((x+{a})^{n}) vs Laguerre at x = {x}"));
        t.rational(&lhs, &ch, || format!("fft((x+{a})^{n}) vs Charlier at x = {x}"));
    }
    Ok(t)
}

pub(super) fn inverse_charlier_shift(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let n = rng.random_range(0..=8usize);
        let (mut x, a) = (random_rational(rng), random_rational(rng));
        if x.is_zero() {
            x = int(1);
        }
        let lhs = ifft_poly(&shifted_falling(&a, n)).eval(&x);
        let lag = laguerre(n, &(&a - q(n))).eval(&-&x) * fact(n);
        let ch = num_traits::pow(x.clone(), n) * charlier(n, &a, &-&x)?;
        t.rational(&lhs, &lag, || format!("ifft((x+{a})_{n}) vs Laguerre at x = {x}"));
        t.rational(&lhs, &ch, || format!("ifft((x+{a})_{n}) vs Charlier at x = {x}"));
    }
    Ok(t)
}

pub(super) fn basis_shift(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let g = random_monomial(rng, 8);
        let f = random_poly(rng, Basis::Falling, 8);
        for n in 0..=5usize {
            let lhs = fft_poly(&x_power(n).multiply(&g)?);
            let rhs = falling(n).multiply(&fft_poly(&g).shift(&-q(n)))?;
            t.poly(&lhs, &rhs, || format!("fft(x^{n} g), g = {g}"));
            let lhs = ifft_poly(&falling(n).multiply(&f)?);
            let rhs = x_power(n).multiply(&ifft_poly(&f.shift(&q(n))))?;
            t.poly(&lhs, &rhs, || format!("ifft((x)_{n} f), f = {f}"));
        }
    }
    Ok(t)
}

/// Power-series coefficients of `FFT⁻¹(f) = e^{-x} sum f(n) x^n / n!`.
fn ifft_samples(f: &dyn crate::exact::IntegerSequence, len: usize) -> Vec<Rational> {
    series::mul(&series::exp(&int(-1), len), &egf_coeffs(f, len), len)
}

fn as_sequence(c: &[Rational]) -> impl Fn(u64) -> Rational + Sync + '_ {
    move |k| c[k as usize].clone()
}

pub(super) fn binomial_transform_chain(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 13;
    for _ in 0..trials {
        let p = random_monomial(rng, 6);
        let f = sampled(&p);
        let inner = series::mul(&series::exp(&int(1), len), &ifft_samples(&f, len), len);
        for m in 0..len as u64 {
            let chain = fft_series_at(&as_sequence(&inner), m);
            t.rational(&binomial_transform(&f, m), &chain, || format!("BT at {m} for {p}"));
        }
    }
    Ok(t)
}

pub(super) fn inverse_binomial_chain(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 13;
    for _ in 0..trials {
        let p = random_monomial(rng, 6);
        let f = sampled(&p);
        let inner = series::mul(&series::exp(&int(-1), len), &ifft_samples(&f, len), len);
        let inverse: Vec<Rational> = (0..len as u64).map(|m| inverse_binomial_transform(&f, m)).collect();
        for m in 0..len as u64 {
            let chain = fft_series_at(&as_sequence(&inner), m);
            t.rational(&inverse[m as usize], &chain, || format!("BT⁻¹ at {m} for {p}"));
            t.rational(&binomial_transform(&as_sequence(&inverse), m), &f(m), || format!("BT(BT⁻¹ f) at {m} for {p}"));
        }
    }
    Ok(t)
}

pub(super) fn convolution_egf(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 31;
    for _ in 0..trials {
        let (pf, pg) = (random_monomial(rng, 5), random_monomial(rng, 5));
        let (f, g) = (sampled(&pf), sampled(&pg));
        let product = egf_product_coeffs(&f, &g, len);
        for (k, coeff) in product.iter().enumerate() {
            t.rational(&binomial_convolution(&f, &g, k as u64), coeff, || format!("conv({pf}, {pg}) at {k}"));
        }
    }
    Ok(t)
}

pub(super) fn convolution_with_one(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let one = |_: u64| int(1);
    for _ in 0..trials {
        let p = random_monomial(rng, 6);
        let g = sampled(&p);
        for x in 0..=15u64 {
            t.rational(&binomial_convolution(&one, &g, x), &binomial_transform(&g, x), || format!("conv(1, {p}) at {x}"));
        }
    }
    Ok(t)
}

pub(super) fn iterated_convolution_check(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials.min(20) {
        let p = random_monomial(rng, 4);
        let f = sampled(&p);
        for n in 0..=3usize {
            let power = egf_power_coeffs(&f, n, 11);
            for x in 0..=10u64 {
                t.rational(&iterated_convolution(&f, n, x), &power[x as usize], || format!("conv^({n})({p}) at {x}"));
            }
        }
    }
    Ok(t)
}

pub(super) fn scaling(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 8);
        for (a, b) in SHIFTS {
            let a = frac(a, b);
            let lhs = fft_poly(&p.scale_argument(&a));
            let rhs = fft_poly(&p).apply(&OperatorExpr::Scale(a.clone()));
            t.poly(&lhs, &rhs, || format!("fft(p({a} x)), p = {p}"));
        }
    }
    Ok(t)
}

pub(super) fn falling_product_ifft(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8usize {
        for m in 0..=8usize {
            let lhs = ifft_poly(&falling(n).multiply(&falling(m))?);
            let lag = laguerre(m, &(q(n) - q(m))).scale_argument(&int(-1)).scale(&fact(m));
            let rhs = x_power(n).multiply(&lag)?;
            t.poly(&lhs, &rhs, || format!("ifft((x)_{n} (x)_{m})"));
        }
    }
    Ok(t)
}

pub(super) fn falling_linearization(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8usize {
        for m in 0..=8usize {
            let direct = falling(n).convert(Basis::Monomial).multiply(&falling(m).convert(Basis::Monomial))?;
            let mut coeffs = vec![Rational::zero(); n + m + 1];
            for k in 0..=n.min(m) {
                let c = Rational::from_integer((binomial(n, k) * binomial(m, k) * factorial(k)).into());
                coeffs[n + m - k] += c;
            }
            t.poly(&BasisPolynomial::new(Basis::Falling, coeffs), &direct, || format!("(x)_{n} (x)_{m}"));
        }
    }
    Ok(t)
}

pub(super) fn hadamard(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let (f, g) = (random_poly(rng, Basis::Falling, 8), random_poly(rng, Basis::Falling, 8));
        t.poly(&hadamard_ifft(&f, &g), &ifft_poly(&f.multiply(&g)?), || format!("hadamard_ifft({f}, {g})"));
    }
    Ok(t)
}

pub(super) fn hadamard_fft(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let (big_f, big_g) = (random_monomial(rng, 8), random_monomial(rng, 8));
        let lhs = fft_poly(&big_f).multiply(&fft_poly(&big_g))?;
        let (mut df, mut dg) = (big_f.clone(), big_g.clone());
        let mut sum = BasisPolynomial::zero(Basis::Monomial);
        let mut k = 0;
        while !df.is_zero() && !dg.is_zero() {
            let term = df.multiply(&dg)?.multiply(&x_power(k))?.scale(&fact(k).recip());
            sum = &sum + &term;
            df = df.derivative();
            dg = dg.derivative();
            k += 1;
        }
        t.poly(&lhs, &fft_poly(&sum), || format!("fft({big_f}) fft({big_g})"));
    }
    Ok(t)
}

pub(super) fn convolution_product(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 13;
    for _ in 0..trials {
        let (pf, pg) = (random_monomial(rng, 5), random_monomial(rng, 5));
        let (f, g) = (sampled(&pf), sampled(&pg));
        let conv: Vec<Rational> = (0..len as u64).map(|x| binomial_convolution(&f, &g, x)).collect();
        let inverse: Vec<Rational> = (0..len as u64).map(|x| inverse_binomial_transform(&as_sequence(&conv), x)).collect();
        let lhs = ifft_samples(&as_sequence(&inverse), len);
        let rhs = series::mul(&ifft_samples(&f, len), &ifft_samples(&g, len), len);
        for k in 0..len {
            t.rational(&lhs[k], &rhs[k], || format!("coefficient {k} of FFT⁻¹(BT⁻¹(conv({pf}, {pg})))"));
        }
    }
    Ok(t)
}

pub(super) fn multiplication_chain(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let (big_f, big_g) = (random_monomial(rng, 5), random_monomial(rng, 5));
        let (ff, fg) = (fft_poly(&big_f), fft_poly(&big_g));
        let lhs = fft_poly(&big_f.multiply(&big_g)?);
        let (sf, sg) = (sampled(&ff), sampled(&fg));
        let conv: Vec<Rational> = (0..=12u64).map(|x| binomial_convolution(&sf, &sg, x)).collect();
        let conv_seq = |k: u64| conv[k as usize].clone();
        for k in 0..=12u64 {
            t.rational(&lhs.eval(&int(k as i64)), &inverse_binomial_transform(&conv_seq, k), || format!("fft({big_f}·{big_g}) at {k}"));
        }
    }
    Ok(t)
}

pub(super) fn coefficient_extraction(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    for _ in 0..trials {
        let p = random_monomial(rng, 10);
        let taylor = taylor_of(&p);
        for n in 0..=12u64 {
            t.rational(&coefficient_extract(&taylor, n), &p.coeff(n as usize), || format!("coefficient {n} of {p}"));
        }
        let a = random_rational(rng);
        let exp_a = |k: u64| num_traits::pow(a.clone(), k as usize) / fact(k as usize);
        for n in 0..=8u64 {
            t.rational(&coefficient_extract(&exp_a, n), &exp_a(n), || format!("coefficient {n} of e^({a} x)"));
        }
        // e^{-x} EGF(BT(n! a_n)) recovers the power series itself
        let len = 12;
        let scaled = |n: u64| p.coeff(n as usize) * fact(n as usize);
        let bt: Vec<Rational> = (0..len as u64).map(|m| binomial_transform(&scaled, m)).collect();
        let bt_seq = |k: u64| bt[k as usize].clone();
        let recovered = series::mul(&series::exp(&int(-1), len), &egf_coeffs(&bt_seq, len), len);
        for (n, c) in recovered.iter().enumerate() {
            t.rational(c, &p.coeff(n), || format!("series recovered from BT(n! a_n), coefficient {n}"));
        }
    }
    Ok(t)
}

/// Coefficients of `e^{-x} (x∂)^k e^x`, truncated to `len`.
fn theta_on_exp(k: usize, len: usize) -> Vec<Rational> {
    let mut c = series::exp(&int(1), len);
    for _ in 0..k {
        c = c.iter().enumerate().map(|(n, a)| a * q(n)).collect();
    }
    series::mul(&series::exp(&int(-1), len), &c, len)
}

pub(super) fn theta_representation(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 14;
    for k in 0..=10 {
        let expected = touchard(k);
        let got = theta_on_exp(k, len);
        for (n, c) in got.iter().enumerate() {
            t.rational(c, &expected.coeff(n), || format!("coefficient {n} of e^(-x) (x∂)^{k} e^x"));
        }
    }
    for _ in 0..trials {
        let f = random_monomial(rng, 10);
        let combo = f
            .coeffs()
            .iter()
            .enumerate()
            .fold(BasisPolynomial::zero(Basis::Monomial), |acc, (k, a)| &acc + &touchard(k).scale(a));
        t.poly(&ifft_poly(&f), &combo, || format!("FFT⁻¹({f}) as e^(-x) f(x∂) e^x"));
        t.poly(&fft_poly(&combo), &f, || format!("FFT(e^(-x) f(x∂) e^x) for f = {f}"));
    }
    Ok(t)
}

pub(super) fn bernoulli_structure(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    let len = 14;
    // x e^x / (e^x - 1) = e^x / ((e^x - 1)/x)
    let expm1_over_x: Vec<Rational> = series::expm1(len + 1).into_iter().skip(1).collect();
    let quotient = series::div(&series::exp(&int(1), len), &expm1_over_x, len);
    for (m, coeff) in quotient.iter().enumerate() {
        let sign = if m.is_multiple_of(2) { int(1) } else { int(-1) };
        let expected = sign * crate::combinatorics::bernoulli(m) / fact(m);
        t.rational(coeff, &expected, || format!("coefficient of x^{} in e^x/(e^x-1)", m as i64 - 1));
    }
    Ok(t)
}

pub(super) fn power_exp_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for s in 0..=8u64 {
        let coeffs = move |n: u64| {
            if n < s {
                Rational::zero()
            } else {
                let sign = if (n - s).is_multiple_of(2) { int(1) } else { int(-1) };
                sign / fact((n - s) as usize)
            }
        };
        for m in 0..=12u64 {
            let expected = if m == s { fact(s as usize) } else { Rational::zero() };
            t.rational(&fft_series_at(&coeffs, m), &expected, || format!("fft(x^{s} e^(-x)) at {m}"));
        }
    }
    Ok(t)
}

pub(super) fn monomial_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8 {
        t.poly(&fft_poly(&x_power(n)), &falling(n), || format!("fft(x^{n})"));
    }
    Ok(t)
}

pub(super) fn falling_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8 {
        t.poly(&fft_poly(&falling(n)), &z_poly(n), || format!("fft((x)_{n})"));
    }
    Ok(t)
}

pub(super) fn z_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8 {
        let expected = (0..=n).fold(BasisPolynomial::zero(Basis::Falling), |acc, k| {
            &acc + &z_poly(k).scale(&Rational::from_integer(stirling_first_signed(n, k)))
        });
        t.poly(&fft_poly(&z_poly(n)), &expected, || format!("fft(Z_{n})"));
    }
    Ok(t)
}

pub(super) fn touchard_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8 {
        t.poly(&fft_poly(&touchard(n)), &x_power(n), || format!("fft(T_{n})"));
    }
    Ok(t)
}

pub(super) fn stirling_touchard_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8 {
        let combo = (0..=n).fold(BasisPolynomial::zero(Basis::Monomial), |acc, k| {
            &acc + &touchard(k).scale(&Rational::from_integer(stirling_second(n, k).into()))
        });
        t.poly(&fft_poly(&combo), &touchard(n), || format!("fft(sum S({n},k) T_k)"));
    }
    Ok(t)
}

fn laguerre_row_lhs(n: usize, m: usize) -> Result<BasisPolynomial> {
    let lag = laguerre(n, &q(m)).scale_argument(&int(-1));
    x_power(n + m).multiply(&lag)
}

pub(super) fn laguerre_row(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    for n in 0..=8usize {
        for m in 0..=8usize {
            let rhs = falling(n + m).multiply(&falling(n))?.scale(&fact(n).recip());
            t.poly(&fft_poly(&laguerre_row_lhs(n, m)?), &rhs, || format!("fft(x^{} L_{n}^({m})(-x))", n + m));
        }
    }
    Ok(t)
}

/// Measures how far the row `(x)_{n+m} (x)_m / m!` is from the transform.
pub(super) fn laguerre_row_as_printed(_rng: &mut ChaCha8Rng, _trials: usize) -> Check {
    let mut t = Tally::exact();
    let mut worst = 0.0f64;
    let mut wrong = 0;
    for n in 0..=8usize {
        for m in 0..=8usize {
            let printed = falling(n + m).multiply(&falling(m))?.scale(&fact(m).recip());
            let diff = &fft_poly(&laguerre_row_lhs(n, m)?) - &printed;
            t.trials += 1;
            if !diff.is_zero() {
                wrong += 1;
                let size = diff.coeffs().iter().map(|c| crate::scalar::to_f64(c).abs()).fold(0.0, f64::max);
                worst = worst.max(size);
            }
        }
    }
    t.max_abs_error = worst;
    t.note = Some(format!(
        "{wrong} of 81 (n, m) pairs differ; the row holds with (x)_n / n! in place of (x)_m / m!"
    ));
    Ok(t)
}

/// Measures the sign discrepancy of the `(-a)^n c_n(x, -a)` form.
pub(super) fn charlier_sign_as_printed(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let mut t = Tally::exact();
    let mut wrong = 0;
    for _ in 0..trials {
        let n = rng.random_range(1..=8usize);
        let (x, a) = (random_rational(rng), random_rational(rng));
        if a.is_zero() {
            continue;
        }
        let lhs = fft_poly(&binomial_power(&a, n)).eval(&x);
        let printed = num_traits::pow(-&a, n) * charlier(n, &x, &-&a)?;
        t.trials += 1;
        if lhs != printed {
            wrong += 1;
            t.max_abs_error = t.max_abs_error.max(crate::scalar::to_f64(&(&lhs - &printed)).abs());
        }
    }
    t.note = Some(format!(
        "{wrong} of {} samples differ; the identity holds with a^n in place of (-a)^n",
        t.trials
    ));
    Ok(t)
}

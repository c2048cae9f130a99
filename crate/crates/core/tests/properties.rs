use proptest::prelude::*;

use factorial_transform::exact::{
    binomial_convolution, binomial_transform, fft_poly, hadamard_ifft, ifft_poly, inverse_binomial_transform,
    irft_poly, rft_poly,
};
use factorial_transform::numeric::{fft_fn, ifft_fn, NumericConfig, SeriesSource, Term};
use factorial_transform::scalar::{frac, int, to_f64};
use factorial_transform::{Basis, BasisPolynomial, OperatorExpr, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| frac(n, d))
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Monomial), Just(Basis::Falling), Just(Basis::Rising)]
}

fn poly_in(basis: Basis, max_len: usize) -> impl Strategy<Value = BasisPolynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(move |c| BasisPolynomial::new(basis, c))
}

fn monomial(max_len: usize) -> impl Strategy<Value = BasisPolynomial> {
    poly_in(Basis::Monomial, max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn falling_transform_inverts(p in monomial(21)) {
        prop_assert_eq!(ifft_poly(&fft_poly(&p)), p);
    }

    #[test]
    fn rising_transform_inverts(p in monomial(21)) {
        prop_assert_eq!(irft_poly(&rft_poly(&p)), p);
    }

    #[test]
    fn transforms_are_linear(p in monomial(10), q in monomial(10), a in rational(), b in rational()) {
        let combo = &(&p * &a) + &(&q * &b);
        prop_assert_eq!(fft_poly(&combo), &(&fft_poly(&p) * &a) + &(&fft_poly(&q) * &b));
        prop_assert_eq!(rft_poly(&combo), &(&rft_poly(&p) * &a) + &(&rft_poly(&q) * &b));
    }

    #[test]
    fn reflection_at_rational_points(p in monomial(12), x in rational()) {
        let reflected = fft_poly(&p.scale_argument(&int(-1)));
        prop_assert_eq!(rft_poly(&p).eval(&x), reflected.eval(&-x));
    }

    #[test]
    fn derivative_becomes_difference(p in monomial(10), k in 0usize..4) {
        prop_assert_eq!(
            fft_poly(&p.apply(&OperatorExpr::Derivative(k))),
            fft_poly(&p).apply(&OperatorExpr::ForwardDifference(k))
        );
    }

    #[test]
    fn rising_transform_turns_derivative_into_backward_difference(p in monomial(10), k in 0usize..4) {
        prop_assert_eq!(
            rft_poly(&p.apply(&OperatorExpr::Derivative(k))).convert(Basis::Monomial),
            rft_poly(&p).apply(&OperatorExpr::BackwardDifference(k)).convert(Basis::Monomial)
        );
    }

    #[test]
    fn difference_is_a_unit_step(p in poly_in(Basis::Falling, 10), b in basis(), x in rational()) {
        let q = p.convert(b);
        let expected = q.eval(&(&x + int(1))) - q.eval(&x);
        prop_assert_eq!(q.forward_difference().eval(&x), expected);
    }

    #[test]
    fn hadamard_route_matches_product(f in poly_in(Basis::Falling, 7), g in poly_in(Basis::Falling, 7)) {
        prop_assert_eq!(hadamard_ifft(&f, &g), ifft_poly(&f.multiply(&g).unwrap()));
    }

    #[test]
    fn binomial_transform_inverts(p in monomial(6), m in 0u64..12) {
        let f = |n: u64| p.eval(&int(n as i64));
        let bt: Vec<Rational> = (0..=m).map(|k| binomial_transform(&f, k)).collect();
        let seq = |k: u64| bt[k as usize].clone();
        prop_assert_eq!(inverse_binomial_transform(&seq, m), f(m));
    }

    #[test]
    fn convolution_is_symmetric(p in monomial(5), q in monomial(5), x in 0u64..15) {
        let f = |n: u64| p.eval(&int(n as i64));
        let g = |n: u64| q.eval(&int(n as i64));
        prop_assert_eq!(binomial_convolution(&f, &g, x), binomial_convolution(&g, &f, x));
    }

    #[test]
    fn polynomial_json_round_trips(p in poly_in(Basis::Rising, 12)) {
        let text = serde_json::to_string(&p).unwrap();
        let back: BasisPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn numeric_newton_sum_matches_exact_at_integers(p in monomial(8), s in 0u32..10) {
        let mono = p.clone();
        let src = SeriesSource::taylor(f64::INFINITY, move |n| Term::Exact(mono.coeff(n as usize)));
        let got = fft_fn(&src, s as f64, &NumericConfig::default()).unwrap().value;
        let expected = to_f64(&fft_poly(&p).eval(&int(s as i64)));
        prop_assert!((got - expected).abs() <= 1e-12 * expected.abs().max(1.0), "{} vs {}", got, expected);
    }

    #[test]
    fn numeric_inverse_matches_exact(p in monomial(6), x in -2.0f64..3.0) {
        let q = p.clone();
        let src = SeriesSource::samples(move |n| Term::Exact(q.eval(&int(n as i64))));
        let cfg = NumericConfig::default().with_truncation(200);
        let got = ifft_fn(&src, x, &cfg).unwrap().value;
        let expected = ifft_poly(&p).eval(&x);
        let scale = p.coeffs().iter().map(|c| to_f64(c).abs()).sum::<f64>().max(1.0) * 1e3;
        prop_assert!((got - expected).abs() <= 1e-12 * scale, "{} vs {}", got, expected);
    }
}

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use factorial_transform::numeric::{fractional_derivative, laguerre_rule, rft_fn, Builtin, NumericConfig, QuadratureSpec};
use factorial_transform::verify::run_check;

fn quadrature(c: &mut Criterion) {
    let mut group = c.benchmark_group("laguerre_rule");
    for nodes in [20, 80, 160] {
        // A fresh exponent on every iteration keeps the rule cache from answering.
        let mut step = 0u32;
        group.bench_function(BenchmarkId::from_parameter(nodes), |b| {
            b.iter(|| {
                step = step.wrapping_add(1);
                laguerre_rule(nodes, -0.5 + f64::from(step) * 1e-9).unwrap()
            })
        });
    }
    group.finish();

    let quad = QuadratureSpec::default();
    let mut group = c.benchmark_group("rft_fn");
    group.bench_function("cubic", |b| b.iter(|| rft_fn(&|t| t * t * t, black_box(2.5), &quad).unwrap()));
    group.bench_function("one_over_one_plus_t", |b| {
        b.iter(|| rft_fn(&|t| 1.0 / (1.0 + t), black_box(0.5), &quad).unwrap())
    });
    group.finish();
}

fn series(c: &mut Criterion) {
    let cfg = NumericConfig::default();
    let src = Builtin::parse("exp(2)").unwrap().taylor().unwrap();
    c.bench_function("fractional_derivative/exp(2)", |b| {
        b.iter(|| fractional_derivative(&src, black_box(0.5), 0.0, &cfg).unwrap())
    });
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for name in ["eq1_fft_round_trip", "eq39_charlier_orthogonality", "table3_sin_row"] {
        group.bench_function(name, |b| b.iter(|| run_check(name, 1).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, quadrature, series, verification);
criterion_main!(benches);

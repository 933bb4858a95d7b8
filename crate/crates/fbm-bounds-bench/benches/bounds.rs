//! Benchmarks for the analytic entry points: the merged bound report, the
//! entropy-refined upper bound (the most quadrature-heavy route), and the
//! tail-rate normalizer.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fbm_bounds::bounds::{combined_bounds, lambda_u, mu_bounds, omega, upper_u2_sudakov, Hurst};

fn h(v: f64) -> Hurst {
    Hurst::new(v).expect("valid index")
}

fn bench_combined(c: &mut Criterion) {
    let mut group = c.benchmark_group("combined_bounds");
    group.sample_size(20);
    for hv in [0.1, 0.3, 0.49, 0.7] {
        group.bench_function(format!("h_{hv}"), |b| {
            let point = h(hv);
            b.iter(|| combined_bounds(black_box(point)).expect("in range"))
        });
    }
    group.finish();
}

fn bench_sudakov_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("upper_u2_sudakov");
    group.sample_size(20);
    for hv in [0.3, 0.49] {
        group.bench_function(format!("h_{hv}"), |b| {
            let point = h(hv);
            b.iter(|| upper_u2_sudakov(black_box(point)).expect("in range"))
        });
    }
    group.finish();
}

fn bench_lambda(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_u");
    for hv in [0.3, 0.5, 0.7] {
        group.bench_function(format!("u_1_h_{hv}"), |b| {
            let point = h(hv);
            b.iter(|| lambda_u(black_box(1.0), black_box(point)).expect("in range"))
        });
    }
    group.finish();
}

fn bench_components(c: &mut Criterion) {
    c.bench_function("omega/h_0.3", |b| {
        let point = h(0.3);
        b.iter(|| omega(black_box(point)).expect("in range"))
    });
    c.bench_function("mu_bounds/h_0.3_alpha_1", |b| {
        let point = h(0.3);
        b.iter(|| mu_bounds(black_box(point), black_box(1.0)).expect("in range"))
    });
}

criterion_group!(
    benches,
    bench_combined,
    bench_sudakov_route,
    bench_lambda,
    bench_components
);
criterion_main!(benches);

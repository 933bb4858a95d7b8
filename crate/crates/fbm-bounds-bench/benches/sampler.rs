//! Benchmarks for path generation and the Monte-Carlo estimators: per-path
//! cost of both sampling backends across grid sizes, and a small end-to-end
//! supremum estimate.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use fbm_bounds::mc::{estimate_sup_drift, FgnSampler, SamplerSpec};
use fbm_bounds::{Hurst, SamplerMethod};

fn h(v: f64) -> Hurst {
    Hurst::new(v).expect("valid index")
}

fn bench_circulant_path(c: &mut Criterion) {
    let mut group = c.benchmark_group("circulant_path");
    for log2_steps in [10u32, 14] {
        let steps = 1usize << log2_steps;
        let spec = SamplerSpec::new(h(0.7), steps, 1.0 / steps as f64, SamplerMethod::Circulant)
            .expect("valid spec");
        let sampler = FgnSampler::new(spec).expect("plannable");
        let mut scratch = sampler.scratch();
        let mut out = vec![0.0; steps];
        group.throughput(Throughput::Elements(steps as u64));
        group.bench_function(format!("steps_2e{log2_steps}"), |b| {
            let mut path = 0u64;
            b.iter(|| {
                sampler.sample_into(black_box(42), path, &mut scratch, &mut out);
                path += 1;
                black_box(out[0])
            })
        });
    }
    group.finish();
}

fn bench_cholesky_path(c: &mut Criterion) {
    let steps = 1usize << 9;
    let spec = SamplerSpec::new(h(0.7), steps, 1.0 / steps as f64, SamplerMethod::Cholesky)
        .expect("valid spec");
    let sampler = FgnSampler::new(spec).expect("plannable");
    let mut scratch = sampler.scratch();
    let mut out = vec![0.0; steps];
    c.bench_function("cholesky_path/steps_2e9", |b| {
        let mut path = 0u64;
        b.iter(|| {
            sampler.sample_into(black_box(42), path, &mut scratch, &mut out);
            path += 1;
            black_box(out[0])
        })
    });
}

fn bench_supremum_estimate(c: &mut Criterion) {
    let mut group = c.benchmark_group("estimate_sup_drift");
    group.sample_size(10);
    group.bench_function("h_0.7_T4_steps_2e12_paths_64", |b| {
        b.iter(|| {
            estimate_sup_drift(
                h(0.7),
                black_box(1.0),
                4.0,
                1 << 12,
                64,
                42,
                SamplerMethod::Circulant,
            )
            .expect("valid run")
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_circulant_path,
    bench_cholesky_path,
    bench_supremum_estimate
);
criterion_main!(benches);

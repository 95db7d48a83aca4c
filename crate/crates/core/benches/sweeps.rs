//! Sequential against data-parallel execution of the main sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jack_core::series::omega_kernel;
use jack_core::verify::{verify_oracle, verify_orthogonality, verify_recursions};
use jack_core::{JackFamily, Parallelism};

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn family(c: &mut Criterion) {
    let mut g = c.benchmark_group("family_build_n3_d5");
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| JackFamily::build(black_box(3), black_box(5), mode))
        });
    }
    g.finish();
}

fn kernel(c: &mut Criterion) {
    let mut g = c.benchmark_group("omega_kernel_n3_d4");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| omega_kernel(black_box(3), black_box(4), mode))
        });
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("verification");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new("orthogonality_n3_d3", name), |b| {
            b.iter(|| verify_orthogonality(3, 3, mode).unwrap())
        });
        g.bench_function(BenchmarkId::new("oracle_n3_d4", name), |b| {
            b.iter(|| verify_oracle(3, 4, mode).unwrap())
        });
        g.bench_function(BenchmarkId::new("recursions_n4_d6", name), |b| {
            b.iter(|| verify_recursions(4, 6, mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, family, kernel, sweeps);
criterion_main!(benches);

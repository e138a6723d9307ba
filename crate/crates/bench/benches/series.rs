use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gft_bench::{hypergeometric, sample};
use gft_core::omega::{omega, phi_theorem1};
use gft_core::OmegaParams;

fn arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for order in [32, 64, 128, 256] {
        let f = sample(0, order);
        let g = sample(0, order);
        group.bench_with_input(BenchmarkId::new("cauchy_mul", order), &order, |b, _| {
            b.iter(|| black_box(&f).cauchy_mul(black_box(&g)))
        });
        group.bench_with_input(BenchmarkId::new("divide", order), &order, |b, _| {
            b.iter(|| black_box(&f).divide(black_box(&g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("log_exp", order), &order, |b, _| {
            b.iter(|| black_box(&f).log_unit().unwrap().exp_unit())
        });
    }
    group.finish();
}

fn functionals(c: &mut Criterion) {
    let op = hypergeometric(1);
    let params = OmegaParams::new(0.7, -0.4).unwrap();
    let mut group = c.benchmark_group("functionals");
    for order in [64, 256] {
        let f = sample(1, order);
        group.bench_with_input(BenchmarkId::new("apply", order), &f, |b, f| b.iter(|| op.apply(f).unwrap()));
        group.bench_with_input(BenchmarkId::new("omega", order), &f, |b, f| {
            b.iter(|| omega(&op, &params, f).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("phi", order), &f, |b, f| {
            b.iter(|| phi_theorem1(&op, &params, f).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, arithmetic, functionals);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, Criterion};

use gft_core::regions::{min_boundary_modulus_squared_k, subordinate_to};
use gft_core::verify::{preset, run_identity_suite, IdentitySuite};
use gft_core::{DominantRegion, SamplingGrid, TruncatedSeries};

fn suites(c: &mut Criterion) {
    let suite = IdentitySuite { trials: 5, ..Default::default() };
    c.bench_function("identity_suite_5_trials", |b| b.iter(|| run_identity_suite(&suite).unwrap()));

    let mut config = preset("ex2").unwrap();
    config.trials = 4;
    let mut group = c.benchmark_group("trials");
    group.sample_size(10);
    group.bench_function("ex2_4_trials", |b| b.iter(|| gft_core::verify::run_implication_trial(&config).unwrap()));
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let grid = SamplingGrid::default();
    let q = TruncatedSeries::from_real(0, &[1.0, 0.3, 0.05, 0.01]).unwrap();
    let region = DominantRegion::lemniscate(0.5).unwrap();
    c.bench_function("subordinate_default_grid", |b| b.iter(|| subordinate_to(&q, &region, &grid).unwrap()));
    c.bench_function("k_minimum", |b| b.iter(min_boundary_modulus_squared_k));
}

criterion_group!(benches, suites, sampling);
criterion_main!(benches);

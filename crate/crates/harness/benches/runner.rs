//! Compares the parallel and sequential trial runners on a heavy suite.

use criterion::{criterion_group, criterion_main, Criterion};
use harness::{run_suite, run_suite_sequential, Params};

fn bench_runners(c: &mut Criterion) {
    let params = Params::default();
    let mut group = c.benchmark_group("gamma-cocycle-k1");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| run_suite("gamma-cocycle-k1", &params, 11, 100).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| run_suite_sequential("gamma-cocycle-k1", &params, 11, 100).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_runners);
criterion_main!(benches);

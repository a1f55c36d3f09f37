//! Verifier throughput: naive reference vs the scaled-integer engine,
//! sequential vs parallel, on constructed acute sets.

use acute_core::doubling::power_construct;
use acute_core::fibonacci::fibonacci_construct;
use acute_core::verify::{reference::verify_acute_naive, verify_acute, verify_acute_sequential};
use acute_core::QVector;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_engines(c: &mut Criterion) {
    let sets: Vec<(&str, Vec<QVector>)> = vec![
        ("power_d9_n32", power_construct(9).unwrap()),
        ("fibonacci_d8_n55", fibonacci_construct(8).unwrap().points().to_vec()),
    ];

    let mut group = c.benchmark_group("verify");
    for (name, points) in &sets {
        group.bench_with_input(BenchmarkId::new("naive", name), points, |b, pts| {
            b.iter(|| verify_acute_naive(pts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), points, |b, pts| {
            b.iter(|| verify_acute_sequential(pts).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", name), points, |b, pts| {
            b.iter(|| verify_acute(pts).unwrap())
        });
    }
    group.finish();

    // a larger instance where the sweep, not setup, dominates
    let big = power_construct(13).unwrap();
    let mut large = c.benchmark_group("verify_large");
    large.sample_size(10);
    large.bench_function("sequential_power_d13_n128", |b| {
        b.iter(|| verify_acute_sequential(&big).unwrap())
    });
    #[cfg(feature = "parallel")]
    large.bench_function("parallel_power_d13_n128", |b| {
        b.iter(|| verify_acute(&big).unwrap())
    });
    large.finish();
}

criterion_group!(benches, bench_engines);
criterion_main!(benches);

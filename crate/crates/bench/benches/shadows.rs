use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypham_core::hypergraph::Hypergraph;
use hypham_core::rng::SplitMix64;
use hypham_core::shadows::{iterated_cleanup, kk_bound, robust_shadow};
use hypham_core::Rational;
use std::hint::black_box;

fn dense(k: usize, n: usize, seed: u64) -> Hypergraph {
    let mut rng = SplitMix64::new(seed);
    Hypergraph::random(k, n, 9, 10, &mut rng).unwrap()
}

fn bench_robust_shadow(c: &mut Criterion) {
    let eps = Rational::new(1.into(), 100.into());
    let mut group = c.benchmark_group("robust_shadow");
    for (k, n) in [(3usize, 14usize), (4, 14), (5, 12)] {
        let h = dense(k, n, 41);
        group.bench_with_input(BenchmarkId::new("drop1", format!("{k}_{n}")), &h, |b, h| {
            b.iter(|| robust_shadow(black_box(h), 1, &eps).unwrap())
        });
    }
    group.finish();
}

fn bench_kk_bound(c: &mut Criterion) {
    c.bench_function("kk_bound_large", |b| {
        b.iter(|| kk_bound(black_box(184_756), 10, 3).unwrap())
    });
}

fn bench_cleanup(c: &mut Criterion) {
    let h = dense(3, 14, 7);
    let eps = Rational::new(1.into(), 50.into());
    c.bench_function("iterated_cleanup_3_14", |b| {
        b.iter(|| iterated_cleanup(black_box(&h), 1, &eps))
    });
}

criterion_group!(benches, bench_robust_shadow, bench_kk_bound, bench_cleanup);
criterion_main!(benches);

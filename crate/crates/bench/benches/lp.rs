use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypham_core::hypergraph::Hypergraph;
use hypham_core::tilings::{max_fractional_y_tiling, max_y_tiling};
use std::hint::black_box;

/// Exact rational simplex; cost is dominated by BigInt pivots.
fn bench_fractional(c: &mut Criterion) {
    let mut group = c.benchmark_group("frac_tiling");
    group.sample_size(20);
    for n in [8usize, 12, 16] {
        let h = Hypergraph::complete(3, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| max_fractional_y_tiling(black_box(h), 2).unwrap())
        });
    }
    group.finish();
}

fn bench_integral(c: &mut Criterion) {
    let h = Hypergraph::complete(3, 12).unwrap();
    c.bench_function("y_tiling_3_12", |b| {
        b.iter(|| max_y_tiling(black_box(&h), 2, 1_000_000).unwrap())
    });
}

criterion_group!(benches, bench_fractional, bench_integral);
criterion_main!(benches);

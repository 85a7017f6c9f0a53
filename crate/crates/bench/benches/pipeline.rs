use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypham_core::hypergraph::Hypergraph;
use hypham_core::pipeline::{build_absorbing_path, run_pipeline, PipelineParams};
use hypham_core::rng::SplitMix64;
use hypham_core::VertexSet;
use std::hint::black_box;

fn bench_full_pipeline(c: &mut Criterion) {
    let complete = Hypergraph::complete(3, 60).unwrap();
    let mut rng = SplitMix64::new(3);
    let random = Hypergraph::random(3, 60, 9, 10, &mut rng).unwrap();
    let params = PipelineParams::default();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(30);
    for (name, h) in [("complete_3_60", &complete), ("random_3_60", &random)] {
        group.bench_with_input(BenchmarkId::from_parameter(name), h, |b, h| {
            b.iter(|| run_pipeline(black_box(h), 1, &params, 7).unwrap())
        });
    }
    group.finish();
}

/// Station embedding and witness drafting, without cover or connect.
fn bench_absorbing_path(c: &mut Criterion) {
    let h = Hypergraph::complete(3, 60).unwrap();
    let params = PipelineParams::default();
    let avoid = VertexSet::empty();
    c.bench_function("absorbing_path_3_60", |b| {
        b.iter(|| build_absorbing_path(black_box(&h), 1, &params, &avoid).unwrap())
    });
}

criterion_group!(benches, bench_full_pipeline, bench_absorbing_path);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, Criterion};
use frobgen_bench::instances;
use frobgen_core::{compute_chain, synthesize_delta, LevelCap};

fn chain(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    for inst in instances() {
        group.bench_function(inst.name, |b| b.iter(|| compute_chain(&inst.f, LevelCap::Auto).unwrap()));
    }
    group.finish();
}

fn synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("synthesize");
    group.sample_size(10);
    for inst in instances() {
        let report = compute_chain(&inst.f, LevelCap::Auto).unwrap();
        group.bench_function(inst.name, |b| b.iter(|| synthesize_delta(&report).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, chain, synthesis);
criterion_main!(benches);

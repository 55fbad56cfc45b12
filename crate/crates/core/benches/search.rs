use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use semigroup_ranks::endo::{
    enumerate_endomorphisms_structural, enumerate_structural_with, DEFAULT_MAX_N,
};
use semigroup_ranks::par::{Budget, Execution, SearchConfig};
use semigroup_ranks::ranks::{intermediate_rank, lower_rank, upper_rank, verify_conjecture};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn config(execution: Execution) -> SearchConfig {
    SearchConfig::new(Budget::unlimited(), execution)
}

fn ranks(c: &mut Criterion) {
    let end4 = enumerate_endomorphisms_structural(4).unwrap();
    let end5 = enumerate_endomorphisms_structural(5).unwrap();
    let mut group = c.benchmark_group("ranks");
    for (name, mode) in MODES {
        group.bench_with_input(
            BenchmarkId::new("lower_rank End(B_5)", name),
            &mode,
            |b, &m| b.iter(|| lower_rank(end5.table(), &config(m))),
        );
        group.bench_with_input(
            BenchmarkId::new("intermediate_rank End(B_4)", name),
            &mode,
            |b, &m| b.iter(|| intermediate_rank(end4.table(), &config(m))),
        );
        group.bench_with_input(
            BenchmarkId::new("upper_rank End(B_4)", name),
            &mode,
            |b, &m| b.iter(|| upper_rank(end4.table(), &config(m))),
        );
    }
    group.finish();
}

fn conjecture(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::new("n = 5", name), &mode, |b, &m| {
            b.iter(|| verify_conjecture(5, &config(m)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::new("End(B_5)", name), &mode, |b, &m| {
            b.iter(|| enumerate_structural_with(5, DEFAULT_MAX_N, m).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, ranks, conjecture, enumeration);
criterion_main!(benches);

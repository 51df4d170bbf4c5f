use std::hint::black_box;

use bpsplit_core::cliques::count_maximal_cliques;
use bpsplit_core::{
    bp_exact, bp_split, complete_graph, generate, recognize_split, GenKind, GenSpec, Graph,
    SolverConfig,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn split_instances() -> Vec<Graph> {
    (0..16)
        .map(|seed| {
            let spec = GenSpec {
                kind: GenKind::Split {
                    k: 5,
                    s: 4,
                    edge_prob: 0.5,
                },
                seed,
            };
            generate(&spec).unwrap().graph
        })
        .collect()
}

fn exact_complete(c: &mut Criterion) {
    let mut group = c.benchmark_group("bp_exact/complete");
    group.sample_size(10);
    for n in 4..=7 {
        let g = complete_graph(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| bp_exact(black_box(g), &SolverConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn exact_parallel(c: &mut Criterion) {
    let g = complete_graph(7).unwrap();
    let cfg = SolverConfig {
        threads: 4,
        ..SolverConfig::default()
    };
    let mut group = c.benchmark_group("bp_exact/complete-parallel");
    group.sample_size(10);
    group.bench_function("7", |b| b.iter(|| bp_exact(black_box(&g), &cfg).unwrap()));
    group.finish();
}

fn split_pipeline(c: &mut Criterion) {
    let graphs = split_instances();
    c.bench_function("recognize_split/5+4", |b| {
        b.iter(|| {
            graphs
                .iter()
                .filter(|g| recognize_split(black_box(g)).is_some())
                .count()
        })
    });
    c.bench_function("bp_split/5+4", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| bp_split(black_box(g)).unwrap().value)
                .sum::<usize>()
        })
    });
    c.bench_function("bp_exact/5+4", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| {
                    bp_exact(black_box(g), &SolverConfig::default())
                        .unwrap()
                        .optimum
                })
                .sum::<usize>()
        })
    });
    c.bench_function("maximal_cliques/complement-5+4", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| count_maximal_cliques(&black_box(g).complement()).unwrap())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, exact_complete, exact_parallel, split_pipeline);
criterion_main!(benches);

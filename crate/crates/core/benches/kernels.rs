//! Sequential against parallel execution of the counting kernels.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rlgraphs::analyzers::is_l_universal_with;
use rlgraphs::census::{census4_with, profile3_with};
use rlgraphs::constructions::{doubled, iterated_blowup, random_graph, Seed};
use rlgraphs::graph::{circulant, CirculantParam};
use rlgraphs::Exec;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn profile3_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("profile3");
    for k in [500, 2000] {
        let g = doubled(&circulant(k, CirculantParam::OPTIMAL).unwrap()).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, 2 * k), &g, |b, g| b.iter(|| profile3_with(black_box(g), exec)));
        }
    }
    group.finish();
}

fn census4_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("census4");
    group.sample_size(10);
    for n in [300, 1000] {
        let g = random_graph(n, Seed(1)).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| b.iter(|| census4_with(black_box(g), exec)));
        }
    }
    group.finish();
}

fn scan_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("universality5");
    group.sample_size(10);
    let g = iterated_blowup(3).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, g.order()), &g, |b, g| {
            b.iter(|| is_l_universal_with(black_box(g), 5, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, profile3_bench, census4_bench, scan_bench);
criterion_main!(benches);

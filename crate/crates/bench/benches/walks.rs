use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tailwalk::operators::{adjacency_matrix, symmetric_eigendecomposition, truncated_evolution};
use tailwalk::walk::{self, DEFAULT_T_MAX};
use tailwalk_bench::{bench_graphs, measure_pair};

fn bench_step(c: &mut Criterion) {
    let mut group = c.benchmark_group("step");
    for (name, g) in bench_graphs() {
        let rho = walk::uniform_inflow(&g);
        let psi = walk::evolve(&g, 5).last().clone();
        group.bench_function(name, |b| {
            b.iter(|| walk::step(&g, black_box(&psi), &rho).unwrap())
        });
    }
    group.finish();
}

fn bench_stationary(c: &mut Criterion) {
    let mut group = c.benchmark_group("stationary_state");
    group.sample_size(20);
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| walk::stationary_state(black_box(&g))));
    }
    group.finish();
}

fn bench_eigendecomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigendecomposition");
    group.sample_size(20);
    for (name, g) in bench_graphs() {
        let m = adjacency_matrix(&g);
        group.bench_function(name, |b| {
            b.iter(|| symmetric_eigendecomposition(black_box(&m)).unwrap())
        });
    }
    group.finish();
}

fn bench_truncated_evolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("truncated_evolution");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| truncated_evolution(black_box(&g))));
    }
    group.finish();
}

fn bench_total_variance(c: &mut Criterion) {
    let (mu, nu) = measure_pair(12, 7);
    c.bench_function("qtv/formula-n12", |b| {
        b.iter(|| walk::qtv(black_box(&mu), black_box(&nu)))
    });
    c.bench_function("qtv/brute-force-n12", |b| {
        b.iter(|| walk::qtv_brute_force(black_box(&mu), black_box(&nu)).unwrap())
    });
}

fn bench_convergence_speed(c: &mut Criterion) {
    let g = tailwalk::Digraph::cycle(30).unwrap();
    c.bench_function("convergence_speed/cycle-30", |b| {
        b.iter(|| walk::convergence_speed(black_box(&g), 1.0, DEFAULT_T_MAX).unwrap())
    });
}

criterion_group!(
    benches,
    bench_step,
    bench_stationary,
    bench_eigendecomposition,
    bench_truncated_evolution,
    bench_total_variance,
    bench_convergence_speed
);
criterion_main!(benches);

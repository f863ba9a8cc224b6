//! Shared fixtures for the criterion benchmarks.

use tailwalk::{Digraph, VertexMeasure};

/// Deterministic pseudo-random measure pair for distance benchmarks.
pub fn measure_pair(n: usize, seed: u64) -> (VertexMeasure, VertexMeasure) {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = || {
        // xorshift64*
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        let bits = state.wrapping_mul(0x2545f4914f6cdd1d);
        (bits >> 11) as f64 / (1u64 << 53) as f64 * 10.0
    };
    let mu = VertexMeasure::from_values((0..n).map(|_| next()).collect()).unwrap();
    let nu = VertexMeasure::from_values((0..n).map(|_| next()).collect()).unwrap();
    (mu, nu)
}

/// The graphs the benchmarks run on.
pub fn bench_graphs() -> Vec<(&'static str, Digraph)> {
    vec![
        ("cycle-60", Digraph::cycle(60).unwrap()),
        ("circulant-60-3", Digraph::circulant(60, 3).unwrap()),
        ("complete-20", Digraph::complete(20).unwrap()),
        ("petersen", Digraph::petersen()),
    ]
}

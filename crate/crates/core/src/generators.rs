//! Small graph families and seeded random instances.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::graph::MeasuredWeightedGraph;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Complete graph with unit weights and unit measure.
pub fn complete_graph(n: usize) -> Result<MeasuredWeightedGraph> {
    let edges: Vec<_> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j, 1.0))).collect();
    MeasuredWeightedGraph::from_edges(labels(n), vec![1.0; n], &edges)
}

/// Cycle with unit weights and unit measure; `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<MeasuredWeightedGraph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
    MeasuredWeightedGraph::from_edges(labels(n), vec![1.0; n], &edges)
}

/// Path with unit weights and unit measure.
pub fn path_graph(n: usize) -> Result<MeasuredWeightedGraph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1.0)).collect();
    MeasuredWeightedGraph::from_edges(labels(n), vec![1.0; n], &edges)
}

/// Connected random graph on `n` vertices: a random recursive spanning tree
/// plus each remaining pair independently with probability `extra_edge_prob`.
/// Weights and measures are uniform in `[w_lo, w_hi]`.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra_edge_prob: f64,
    w_lo: f64,
    w_hi: f64,
) -> Result<MeasuredWeightedGraph> {
    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        adjacent[u * n + v] = true;
        edges.push((u, v, rng.random_range(w_lo..=w_hi)));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !adjacent[u * n + v] && rng.random_bool(extra_edge_prob) {
                edges.push((u, v, rng.random_range(w_lo..=w_hi)));
            }
        }
    }
    let measure = (0..n).map(|_| rng.random_range(w_lo..=w_hi)).collect();
    MeasuredWeightedGraph::from_edges(labels(n), measure, &edges)
}

/// Random instance used throughout the test suites: weights and measures
/// uniform in `[0.1, 2]`, extra edge probability 0.3.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MeasuredWeightedGraph {
    random_connected_graph(rng, n, 0.3, 0.1, 2.0).expect("generated graph is valid")
}

/// Entries uniform in `[-1, 1]`.
pub fn random_function<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect()
}

/// Independent standard normal entries.
pub fn normal_function<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

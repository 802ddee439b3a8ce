//! Finite measured weighted graphs: validation, metric quantities and JSON I/O.
//!
//! A graph is a triple `(V, w, m)` with symmetric non-negative edge weights
//! `w`, zero on the diagonal, and a strictly positive vertex measure `m`.
//! Vertex order is the file order and is the index order of every matrix
//! built from the graph.

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Opaque vertex label, unique within a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::Invariant("vertex id must be non-empty".into()));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: String,
    m: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    u: String,
    v: String,
    w: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
}

/// A connected finite measured weighted graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct MeasuredWeightedGraph {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    measure: Vec<f64>,
    weights: DMatrix<f64>,
    neighbors: Vec<Vec<usize>>,
    distances: Vec<Vec<usize>>,
}

impl MeasuredWeightedGraph {
    /// Builds a graph from labels, measures and a list of weighted edges
    /// given by index. Each unordered pair may appear more than once only
    /// with identical weights.
    pub fn from_edges(labels: Vec<String>, measure: Vec<f64>, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let n = labels.len();
        if measure.len() != n {
            return Err(Error::Schema(format!(
                "{} labels but {} measure values",
                n,
                measure.len()
            )));
        }
        let mut weights = DMatrix::<f64>::zeros(n, n);
        let mut seen = vec![false; n * n];
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::Schema(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::Invariant(format!("self-loop at vertex `{}`", labels[u])));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Invariant(format!(
                    "edge ({}, {}) has invalid weight {w}",
                    labels[u], labels[v]
                )));
            }
            if seen[u * n + v] {
                if weights[(u, v)] != w {
                    return Err(Error::Invariant(format!(
                        "asymmetric or contradictory weights for ({}, {}): {} vs {w}",
                        labels[u],
                        labels[v],
                        weights[(u, v)]
                    )));
                }
                continue;
            }
            seen[u * n + v] = true;
            seen[v * n + u] = true;
            weights[(u, v)] = w;
            weights[(v, u)] = w;
        }
        Self::from_dense(labels, measure, weights)
    }

    /// Builds a graph from a dense weight matrix, validating every invariant.
    pub fn from_dense(labels: Vec<String>, measure: Vec<f64>, weights: DMatrix<f64>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Invariant("graph has no vertices".into()));
        }
        if measure.len() != n || weights.nrows() != n || weights.ncols() != n {
            return Err(Error::Schema(
                "dimension mismatch between labels, measure and weights".into(),
            ));
        }
        let mut ids = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.into_iter().enumerate() {
            let id = VertexId::new(label)?;
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::Invariant(format!("duplicate vertex id `{id}`")));
            }
            ids.push(id);
        }
        for (i, &m) in measure.iter().enumerate() {
            if !(m.is_finite() && m > 0.0) {
                return Err(Error::Invariant(format!(
                    "measure of `{}` must be positive and finite, got {m}",
                    ids[i]
                )));
            }
        }
        for i in 0..n {
            if weights[(i, i)] != 0.0 {
                return Err(Error::Invariant(format!("self-loop at vertex `{}`", ids[i])));
            }
            for j in 0..n {
                let w = weights[(i, j)];
                if !w.is_finite() || w < 0.0 {
                    return Err(Error::Invariant(format!(
                        "edge ({}, {}) has invalid weight {w}",
                        ids[i], ids[j]
                    )));
                }
                if w != weights[(j, i)] {
                    return Err(Error::Invariant(format!(
                        "asymmetric weights: w({0},{1}) = {w}, w({1},{0}) = {2}",
                        ids[i],
                        ids[j],
                        weights[(j, i)]
                    )));
                }
            }
        }
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| weights[(i, j)] > 0.0).collect())
            .collect();
        let distances = all_pairs_hops(&neighbors);
        if let Some(j) = distances[0].iter().position(|&d| d == usize::MAX) {
            return Err(Error::Invariant(format!(
                "graph is disconnected: `{}` is not reachable from `{}`",
                ids[j], ids[0]
            )));
        }
        Ok(MeasuredWeightedGraph {
            ids,
            index,
            measure,
            weights,
            neighbors,
            distances,
        })
    }

    /// Parses and validates a graph JSON document.
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_slice(bytes).map_err(|e| Error::Schema(e.to_string()))?;
        let labels: Vec<String> = doc.vertices.iter().map(|v| v.id.clone()).collect();
        let measure: Vec<f64> = doc.vertices.iter().map(|v| v.m).collect();
        let mut lookup = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if lookup.insert(l.as_str(), i).is_some() {
                return Err(Error::Invariant(format!("duplicate vertex id `{l}`")));
            }
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            let u = *lookup
                .get(e.u.as_str())
                .ok_or_else(|| Error::Schema(format!("edge references unknown vertex `{}`", e.u)))?;
            let v = *lookup
                .get(e.v.as_str())
                .ok_or_else(|| Error::Schema(format!("edge references unknown vertex `{}`", e.v)))?;
            edges.push((u, v, e.w));
        }
        Self::from_edges(labels, measure, &edges)
    }

    /// Serializes to the graph schema, vertices in canonical order and each
    /// positive-weight edge once with `u` before `v`.
    pub fn to_json(&self) -> String {
        let n = self.len();
        let doc = GraphDocument {
            vertices: self
                .ids
                .iter()
                .zip(&self.measure)
                .map(|(id, &m)| VertexRecord { id: id.0.clone(), m })
                .collect(),
            edges: (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .filter(|&(i, j)| self.weights[(i, j)] > 0.0)
                .map(|(i, j)| EdgeRecord {
                    u: self.ids[i].0.clone(),
                    v: self.ids[j].0.clone(),
                    w: self.weights[(i, j)],
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph document serializes")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, x: usize) -> &VertexId {
        &self.ids[x]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        VertexId::new(label)
            .ok()
            .and_then(|id| self.index.get(&id).copied())
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn measure(&self) -> &[f64] {
        &self.measure
    }

    pub fn weights(&self) -> &DMatrix<f64> {
        &self.weights
    }

    pub fn weight(&self, x: usize, y: usize) -> f64 {
        self.weights[(x, y)]
    }

    /// Vertices adjacent to `x` under `w > 0`, in canonical order.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    /// Transition rate `q(x,y) = w(x,y) / m(x)`.
    #[inline]
    pub fn q(&self, x: usize, y: usize) -> f64 {
        self.weights[(x, y)] / self.measure[x]
    }

    /// `q(x,y)` by vertex label.
    pub fn transition_weight(&self, x: &str, y: &str) -> Result<f64> {
        Ok(self.q(self.vertex_index(x)?, self.vertex_index(y)?))
    }

    /// `Deg(x) = sum_y q(x,y)`.
    pub fn degree(&self, x: usize) -> f64 {
        self.neighbors[x].iter().map(|&y| self.q(x, y)).sum()
    }

    pub fn max_degree(&self) -> f64 {
        (0..self.len()).map(|x| self.degree(x)).fold(0.0, f64::max)
    }

    /// Hop distance on the `w > 0` adjacency.
    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.distances[x][y]
    }

    pub fn diameter(&self) -> usize {
        self.distances
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// `B_r(x)`: `x` first, then every other vertex within distance `r` in
    /// canonical order.
    pub fn ball(&self, x: usize, r: usize) -> Vec<usize> {
        std::iter::once(x)
            .chain((0..self.len()).filter(|&y| y != x && self.distances[x][y] <= r))
            .collect()
    }

    pub fn total_volume(&self) -> f64 {
        self.measure.iter().sum()
    }

    /// Same graph with every weight multiplied by `factor_w` and every
    /// measure by `factor_m`.
    pub fn rescaled(&self, factor_w: f64, factor_m: f64) -> Result<Self> {
        if !(factor_w > 0.0 && factor_m > 0.0) {
            return Err(Error::Domain("rescaling factors must be positive".into()));
        }
        Self::from_dense(
            self.ids.iter().map(|v| v.0.clone()).collect(),
            self.measure.iter().map(|m| m * factor_m).collect(),
            &self.weights * factor_w,
        )
    }
}

fn all_pairs_hops(neighbors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = neighbors.len();
    (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &neighbors[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Three-vertex path `x ~ y ~ z` with `m = (eps, 1, eps)`, `w(x,y) = 1` and
/// `w(y,z) = 1/eps + 3 + eps`. The curvature at `x` is slightly negative
/// while `y` and `z` are strongly positively curved.
pub fn paper_example(eps: f64) -> Result<MeasuredWeightedGraph> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    MeasuredWeightedGraph::from_edges(
        vec!["x".into(), "y".into(), "z".into()],
        vec![eps, 1.0, eps],
        &[(0, 1, 1.0), (1, 2, 1.0 / eps + 3.0 + eps)],
    )
}

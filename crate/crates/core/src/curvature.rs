//! Pointwise Bakry-Émery curvature.
//!
//! At a vertex `x` the curvature for dimension `n` is the largest `K` with
//!
//! ```text
//! Γ₂(f)(x) >= K Γ(f)(x) + (1/n) (Δf(x))²   for all f,
//! ```
//!
//! i.e. the largest `K` for which the local pencil `A - (1/n) c cᵀ - K B`
//! (see [`LocalForms`]) is positive semidefinite. Feasibility is an interval
//! in `K` because `B ⪰ 0`, so the optimum is found by bisection on the
//! smallest eigenvalue of the pencil.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::normal_function;
use crate::graph::MeasuredWeightedGraph;
use crate::linalg::{min_eigenvalue, SortedEigen};
use crate::operators::{
    gamma2, gamma2_at, gamma_at, gamma_closed, laplacian_apply, laplacian_at, local_forms, LocalForms,
};
use crate::report::{CheckReport, ReportBuilder};

/// Default bisection tolerance on `K`.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Pencil eigenvalues above `-EIG_FLOOR * (1 + ‖A‖)` count as non-negative.
const EIG_FLOOR: f64 = 1e-14;

const MAX_DOUBLINGS: usize = 60;
const MAX_BISECTIONS: usize = 400;

/// Dimension parameter `n ∈ (0, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dimension(f64);

impl Dimension {
    pub const INFINITE: Dimension = Dimension(f64::INFINITY);

    pub fn new(n: f64) -> Result<Self> {
        if n > 0.0 && !n.is_nan() {
            Ok(Dimension(n))
        } else {
            Err(Error::Domain(format!("dimension must lie in (0, inf], got {n}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// `1/n`, zero for `n = ∞`.
    pub fn inverse(self) -> f64 {
        if self.is_infinite() {
            0.0
        } else {
            1.0 / self.0
        }
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Dimension::INFINITE
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Dimension::INFINITE),
            other => other
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("invalid dimension `{other}`")))
                .and_then(Dimension::new),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Dimension::new(n),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// Solver record for one vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDiagnostics {
    pub vertex: String,
    /// Bracket `[lo, hi]` after expansion, before bisection.
    pub bracket: [f64; 2],
    pub iterations: usize,
    /// Smallest pencil eigenvalue at the returned curvature.
    pub residual: f64,
    /// Feasibility threshold used for the eigenvalue test.
    pub eig_threshold: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VertexCurvature {
    pub rho: f64,
    pub diagnostics: VertexDiagnostics,
}

/// Curvature values for a fixed dimension, in canonical vertex order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureProfile {
    pub n: Dimension,
    pub rho: Vec<f64>,
    pub diagnostics: Vec<VertexDiagnostics>,
}

impl CurvatureProfile {
    pub fn min(&self) -> f64 {
        self.rho.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn argmin(&self) -> usize {
        (0..self.rho.len())
            .min_by(|&a, &b| self.rho[a].total_cmp(&self.rho[b]))
            .unwrap_or(0)
    }
}

fn pencil_min(lf: &LocalForms, n: Dimension, k: f64) -> Result<f64> {
    min_eigenvalue(&lf.pencil(n.value(), k))
}

/// Largest `K` with `A - (1/n) c cᵀ - K B ⪰ 0` at vertex `x`, to within `tol`.
pub fn vertex_curvature(g: &MeasuredWeightedGraph, x: usize, n: Dimension, tol: f64) -> Result<VertexCurvature> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let label = g.id(x).to_string();
    let lf = local_forms(g, x);
    if lf.dim() == 0 {
        return Err(Error::NoFiniteCurvature {
            vertex: label,
            reason: "vertex has no neighbours; every K is feasible".into(),
        });
    }
    let threshold = EIG_FLOOR * (1.0 + lf.a_norm());
    let feasible = |k: f64| -> Result<bool> { Ok(pencil_min(&lf, n, k)? >= -threshold) };

    let d = g.max_degree();
    let mut lo = -4.0 * d - 1.0;
    let mut hi = 4.0 * d + 1.0;

    let mut found = false;
    for _ in 0..=MAX_DOUBLINGS {
        if feasible(lo)? {
            found = true;
            break;
        }
        hi = lo;
        lo *= 2.0;
    }
    if !found {
        return Err(Error::NoFiniteCurvature {
            vertex: label,
            reason: format!("pencil infeasible down to K = {lo}"),
        });
    }
    let mut bounded = false;
    for _ in 0..=MAX_DOUBLINGS {
        if !feasible(hi)? {
            bounded = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    if !bounded {
        return Err(Error::NoFiniteCurvature {
            vertex: label,
            reason: format!("pencil feasible up to K = {hi}"),
        });
    }

    let bracket = [lo, hi];
    let mut iterations = 0;
    while hi - lo > tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if feasible(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let residual = pencil_min(&lf, n, lo)?;
    Ok(VertexCurvature {
        rho: lo,
        diagnostics: VertexDiagnostics {
            vertex: label,
            bracket,
            iterations,
            residual,
            eig_threshold: threshold,
        },
    })
}

/// Curvature at every vertex. Vertices are solved in parallel; each result
/// depends only on its own vertex, so output equals the sequential run.
pub fn curvature_function(g: &MeasuredWeightedGraph, n: Dimension, tol: f64) -> Result<CurvatureProfile> {
    let per_vertex: Vec<VertexCurvature> = (0..g.len())
        .into_par_iter()
        .map(|x| vertex_curvature(g, x, n, tol))
        .collect::<Result<_>>()?;
    let (rho, diagnostics) = per_vertex.into_iter().map(|v| (v.rho, v.diagnostics)).unzip();
    Ok(CurvatureProfile { n, rho, diagnostics })
}

/// Function on the graph that violates (or most nearly violates) the
/// curvature-dimension inequality at `x` for the value `k`: the eigenvector
/// of the smallest pencil eigenvalue, extended by zero.
pub fn pencil_witness(g: &MeasuredWeightedGraph, x: usize, n: Dimension, k: f64) -> Result<(f64, Vec<f64>)> {
    let lf = local_forms(g, x);
    if lf.dim() == 0 {
        return Ok((0.0, vec![0.0; g.len()]));
    }
    let eig = SortedEigen::new(lf.pencil(n.value(), k))?;
    let (lambda, v) = eig.min();
    Ok((lambda, lf.lift(g.len(), v.as_slice())))
}

/// Checks `Γ₂(f)(x) >= ρ(x) Γ(f)(x) + (1/n)(Δf)²(x)` at every vertex for
/// `samples` seeded standard-normal functions, plus one pencil witness per
/// vertex.
pub fn cd_verify_sampled(
    g: &MeasuredWeightedGraph,
    rho: &[f64],
    n: Dimension,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    cd_verify_with_tol(g, rho, n, samples, seed, crate::report::DEFAULT_TOL_REPORT)
}

pub fn cd_verify_with_tol(
    g: &MeasuredWeightedGraph,
    rho: &[f64],
    n: Dimension,
    samples: usize,
    seed: u64,
    tol_report: f64,
) -> Result<CheckReport> {
    if rho.len() != g.len() {
        return Err(Error::Domain(format!(
            "rho has {} values for {} vertices",
            rho.len(),
            g.len()
        )));
    }
    let inv_n = n.inverse();
    let mut report = ReportBuilder::new("curvature_dimension", seed, tol_report);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let f = normal_function(&mut rng, g.len());
        let g2 = gamma2(g, &f, &f);
        let g1 = gamma_closed(g, &f, &f);
        let lap = laplacian_apply(g, &f);
        for x in 0..g.len() {
            let lhs = rho[x] * g1[x] + inv_n * lap[x] * lap[x];
            report
                .tracker()
                .observe(lhs, g2[x], || format!("sample {s}, vertex {}", g.id(x)));
        }
    }
    let mut witnesses = 0;
    for (x, &rho_x) in rho.iter().enumerate() {
        let (_, f) = pencil_witness(g, x, n, rho_x)?;
        if f.iter().all(|&v| v == 0.0) {
            continue;
        }
        witnesses += 1;
        let g2 = gamma2_at(g, &f, &f, x);
        let g1 = gamma_at(g, &f, &f, x);
        let lap = laplacian_at(g, &f, x);
        let lhs = rho_x * g1 + inv_n * lap * lap;
        report
            .tracker()
            .observe(lhs, g2, || format!("pencil witness, vertex {}", g.id(x)));
    }
    report.samples(samples + witnesses);
    report.detail("random_samples", samples);
    report.detail("witnesses", witnesses);
    report.detail("n", n.to_string());
    Ok(report.finish())
}

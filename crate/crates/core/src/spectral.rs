//! Spectrum of `L`, ground states of `L/2 + ρ`, and the Cheeger constant.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MeasuredWeightedGraph;
use crate::linalg::SortedEigen;
use crate::operators::{laplacian_apply, symmetrized_laplacian};

/// Largest graph accepted by the exhaustive Cheeger search.
pub const CHEEGER_MAX_VERTICES: usize = 24;

const POSITIVITY_REL: f64 = 1e-12;

/// Eigenpairs of `L` on `ℓ²(V, m)`: eigenvalues ascending, eigenfunctions
/// `m`-orthonormal.
#[derive(Debug, Clone)]
pub struct LaplacianSpectrum {
    pub values: Vec<f64>,
    /// Column `k` is the eigenfunction of `values[k]`.
    pub functions: DMatrix<f64>,
}

impl LaplacianSpectrum {
    pub fn function(&self, k: usize) -> Vec<f64> {
        self.functions.column(k).iter().copied().collect()
    }
}

pub fn laplacian_spectrum(g: &MeasuredWeightedGraph) -> Result<LaplacianSpectrum> {
    let eig = SortedEigen::new(symmetrized_laplacian(g))?;
    let n = g.len();
    let m = g.measure();
    let functions = DMatrix::from_fn(n, n, |i, k| eig.vectors[(i, k)] / m[i].sqrt());
    Ok(LaplacianSpectrum {
        values: eig.values,
        functions,
    })
}

/// First positive eigenvalue of `L`.
pub fn lambda1(g: &MeasuredWeightedGraph) -> Result<f64> {
    if g.len() < 2 {
        return Err(Error::Domain("lambda1 needs at least two vertices".into()));
    }
    let s = symmetrized_laplacian(g);
    let norm = s.amax();
    let values = SortedEigen::new(s)?.values;
    if values[1] <= POSITIVITY_REL * norm {
        return Err(Error::Numerical(format!(
            "eigenvalue 0 is not simple (second eigenvalue {})",
            values[1]
        )));
    }
    Ok(values[1])
}

/// Smallest eigenpair of `L/2 + ρ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundState {
    #[serde(rename = "E")]
    pub e: f64,
    /// `ℓ²(m)`-normalized eigenfunction with positive `m`-weighted sum.
    pub phi: Vec<f64>,
    pub positive: bool,
    /// `max_x |((L/2 + ρ)φ - Eφ)(x)|`.
    pub residual: f64,
}

fn schrodinger_matrix(g: &MeasuredWeightedGraph, rho: &[f64]) -> Result<DMatrix<f64>> {
    if rho.len() != g.len() {
        return Err(Error::Domain(format!(
            "rho has {} values for {} vertices",
            rho.len(),
            g.len()
        )));
    }
    if rho.iter().any(|r| !r.is_finite()) {
        return Err(Error::Domain("rho must be finite".into()));
    }
    let mut s = symmetrized_laplacian(g) * 0.5;
    for (i, r) in rho.iter().enumerate() {
        s[(i, i)] += r;
    }
    Ok(s)
}

pub fn ground_state(g: &MeasuredWeightedGraph, rho: &[f64]) -> Result<GroundState> {
    let eig = SortedEigen::new(schrodinger_matrix(g, rho)?)?;
    let (e, u) = eig.min();
    let sqrt_m: Vec<f64> = g.measure().iter().map(|m| m.sqrt()).collect();
    let sign = if u.iter().zip(&sqrt_m).map(|(a, s)| a * s).sum::<f64>() < 0.0 {
        -1.0
    } else {
        1.0
    };
    let phi: Vec<f64> = u.iter().zip(&sqrt_m).map(|(a, s)| sign * a / s).collect();
    let max = phi.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = phi.iter().copied().fold(f64::INFINITY, f64::min);
    let positive = max > 0.0 && min > POSITIVITY_REL * max;
    if !positive {
        return Err(Error::Perron(format!(
            "ground state is not strictly positive (min {min}, max {max})"
        )));
    }
    let lap = laplacian_apply(g, &phi);
    let residual = (0..g.len())
        .map(|x| (-0.5 * lap[x] + rho[x] * phi[x] - e * phi[x]).abs())
        .fold(0.0, f64::max);
    Ok(GroundState {
        e,
        phi,
        positive,
        residual,
    })
}

/// `E = λ_min(L/2 + ρ)` and whether it is positive beyond round-off.
pub fn spectral_positivity(g: &MeasuredWeightedGraph, rho: &[f64]) -> Result<(f64, bool)> {
    let s = schrodinger_matrix(g, rho)?;
    let scale = 1.0 + s.amax();
    let e = SortedEigen::new(s)?.values[0];
    Ok((e, e > POSITIVITY_REL * scale))
}

/// Minimizing subset of the Cheeger ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheegerCut {
    pub value: f64,
    /// Vertex indices of `U`, ascending.
    pub subset: Vec<usize>,
    pub boundary: f64,
    pub volume: f64,
}

/// `h = min { |∂U| / vol U : ∅ ≠ U ⊂ V, vol U ≤ ½ vol V }` by exhaustive search.
pub fn cheeger_constant(g: &MeasuredWeightedGraph) -> Result<f64> {
    Ok(cheeger_cut(g)?.value)
}

pub fn cheeger_cut(g: &MeasuredWeightedGraph) -> Result<CheegerCut> {
    let n = g.len();
    if n > CHEEGER_MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: CHEEGER_MAX_VERTICES,
        });
    }
    if n < 2 {
        return Err(Error::Domain("Cheeger constant needs at least two vertices".into()));
    }
    let m = g.measure();
    let w = g.weights();
    let deg_w: Vec<f64> = (0..n).map(|x| (0..n).map(|y| w[(x, y)]).sum()).collect();
    let vol_total: f64 = m.iter().sum();
    let half = 0.5 * vol_total;
    let full: u32 = (1u32 << n) - 1;

    // Vertex 0 is always in the enumerated set; the complement is scored too.
    let free = n - 1;
    let high_bits = free.min(8);
    let low_bits = free - high_bits;

    let volume_of = |mask: u32| -> f64 { (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).sum() };
    let exact_boundary = |mask: u32| -> f64 {
        let mut b = 0.0;
        for x in (0..n).filter(|&i| mask >> i & 1 == 1) {
            for y in (0..n).filter(|&i| mask >> i & 1 == 0) {
                b += w[(x, y)];
            }
        }
        b
    };

    // (ratio, mask of the scored set)
    let best = (0u32..(1u32 << high_bits))
        .into_par_iter()
        .map(|chunk| {
            let base = 1u32 | (chunk << (1 + low_bits));
            let mut mask = base;
            let mut boundary = exact_boundary(mask);
            let mut best: Option<(f64, u32)> = None;
            for i in 0u32..(1u32 << low_bits) {
                if i > 0 {
                    let v = 1 + i.trailing_zeros() as usize;
                    let to_set: f64 = (0..n)
                        .filter(|&u| mask >> u & 1 == 1 && u != v)
                        .map(|u| w[(v, u)])
                        .sum();
                    if mask >> v & 1 == 0 {
                        boundary += deg_w[v] - 2.0 * to_set;
                    } else {
                        boundary -= deg_w[v] - 2.0 * to_set;
                    }
                    mask ^= 1 << v;
                }
                let vol_in = volume_of(mask);
                let mut consider = |vol: f64, set: u32| {
                    if vol > 0.0 && vol <= half {
                        let r = boundary / vol;
                        if best.is_none_or(|(br, bm)| r < br || (r == br && set < bm)) {
                            best = Some((r, set));
                        }
                    }
                };
                consider(vol_in, mask);
                if mask != full {
                    let comp = full & !mask;
                    consider(volume_of(comp), comp);
                }
            }
            best
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (None, x) | (x, None) => x,
                (Some(a), Some(b)) => Some(if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a }),
            },
        )
        .ok_or_else(|| Error::Numerical("no admissible Cheeger subset".into()))?;

    let set = best.1;
    let boundary = exact_boundary(set);
    let volume = volume_of(set);
    Ok(CheegerCut {
        value: boundary / volume,
        subset: (0..n).filter(|&i| set >> i & 1 == 1).collect(),
        boundary,
        volume,
    })
}

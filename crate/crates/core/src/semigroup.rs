//! Heat semigroup `P_t = e^{-tL}`, Schrödinger semigroups
//! `P_t^W = e^{-t(L+W)}`, and Kato constants of potentials.
//!
//! Every semigroup is evaluated from one eigendecomposition of the
//! `m`-symmetrized generator `M^{1/2}(L+W)M^{-1/2}`, which is reused for
//! all times.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MeasuredWeightedGraph;
use crate::linalg::SortedEigen;
use crate::operators::symmetrized_laplacian;
use crate::quadrature::adaptive_simpson;

pub const DEFAULT_QUAD_TOL: f64 = 1e-9;
pub const QUAD_MAX_DEPTH: usize = 30;

/// `t ↦ e^{-t(L+W)}` on a fixed graph and potential.
#[derive(Debug, Clone)]
pub struct Semigroup {
    sqrt_m: Vec<f64>,
    eig: SortedEigen,
}

impl Semigroup {
    pub fn new(g: &MeasuredWeightedGraph, potential: &[f64]) -> Result<Self> {
        if potential.len() != g.len() {
            return Err(Error::Domain(format!(
                "potential has {} values for {} vertices",
                potential.len(),
                g.len()
            )));
        }
        if potential.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("potential must be finite".into()));
        }
        let mut s = symmetrized_laplacian(g);
        for (i, w) in potential.iter().enumerate() {
            s[(i, i)] += w;
        }
        Ok(Semigroup {
            sqrt_m: g.measure().iter().map(|m| m.sqrt()).collect(),
            eig: SortedEigen::new(s)?,
        })
    }

    pub fn heat(g: &MeasuredWeightedGraph) -> Result<Self> {
        Self::new(g, &vec![0.0; g.len()])
    }

    /// Spectrum of `L + W` in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eig.values
    }

    /// `P_t^W f` for `t >= 0`.
    pub fn apply(&self, t: f64, f: &[f64]) -> Vec<f64> {
        debug_assert!(t >= 0.0);
        if t == 0.0 {
            return f.to_vec();
        }
        let n = self.sqrt_m.len();
        let u: Vec<f64> = f.iter().zip(&self.sqrt_m).map(|(v, s)| v * s).collect();
        let v = &self.eig.vectors;
        let coeffs: Vec<f64> = (0..n)
            .map(|k| {
                let c: f64 = (0..n).map(|i| v[(i, k)] * u[i]).sum();
                c * (-t * self.eig.values[k]).exp()
            })
            .collect();
        (0..n)
            .map(|i| {
                let r: f64 = (0..n).map(|k| v[(i, k)] * coeffs[k]).sum();
                r / self.sqrt_m[i]
            })
            .collect()
    }

    /// `‖P_t^W‖_{∞,∞}`. The kernel is entrywise non-negative, so this is
    /// `max_x (P_t^W 1)(x)`.
    pub fn sup_norm(&self, t: f64) -> f64 {
        let ones = vec![1.0; self.sqrt_m.len()];
        self.apply(t, &ones).into_iter().fold(f64::NEG_INFINITY, f64::max)
    }
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("time must be non-negative and finite, got {t}")))
    }
}

/// `P_t f`.
pub fn heat_apply(g: &MeasuredWeightedGraph, t: f64, f: &[f64]) -> Result<Vec<f64>> {
    check_time(t)?;
    Ok(Semigroup::heat(g)?.apply(t, f))
}

/// `P_t^W f`.
pub fn schrodinger_apply(g: &MeasuredWeightedGraph, potential: &[f64], t: f64, f: &[f64]) -> Result<Vec<f64>> {
    check_time(t)?;
    Ok(Semigroup::new(g, potential)?.apply(t, f))
}

/// `‖P_t^W‖_{∞,∞}`.
pub fn semigroup_sup_norm(g: &MeasuredWeightedGraph, potential: &[f64], t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(Semigroup::new(g, potential)?.sup_norm(t))
}

/// Value of `k_T(W) = ∫_0^T ‖P_s W‖_∞ ds` and its quadrature error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KatoConstant {
    pub value: f64,
    pub quad_error: f64,
    pub evaluations: usize,
}

/// `k_T(W)` by adaptive Simpson quadrature of `s ↦ max_x (P_s W)(x)`.
pub fn kato_constant(g: &MeasuredWeightedGraph, potential: &[f64], horizon: f64, tol: f64) -> Result<KatoConstant> {
    kato_constant_with(&Semigroup::heat(g)?, potential, horizon, tol)
}

/// As [`kato_constant`], reusing a heat semigroup.
pub fn kato_constant_with(heat: &Semigroup, potential: &[f64], horizon: f64, tol: f64) -> Result<KatoConstant> {
    if potential.len() != heat.sqrt_m.len() {
        return Err(Error::Domain("potential length does not match graph".into()));
    }
    if let Some(v) = potential.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
        return Err(Error::Domain(format!("Kato potential must be non-negative, found {v}")));
    }
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::Domain(format!("T must be positive, got {horizon}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "quadrature tolerance must be positive, got {tol}"
        )));
    }
    let sup = potential.iter().copied().fold(0.0, f64::max);
    if sup == 0.0 {
        return Ok(KatoConstant {
            value: 0.0,
            quad_error: 0.0,
            evaluations: 0,
        });
    }
    let integrand = |s: f64| {
        heat.apply(s, potential)
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
            .clamp(0.0, sup)
    };
    let q = adaptive_simpson(integrand, 0.0, horizon, tol, QUAD_MAX_DEPTH);
    Ok(KatoConstant {
        value: q.value.clamp(0.0, horizon * sup),
        quad_error: q.error_estimate,
        evaluations: q.evaluations,
    })
}

/// Which smallness threshold the Kato constant is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KatoVariant {
    /// `k_T((ρ-K)₋) ≤ ½(1 - e^{-KT/4})`.
    A,
    /// `k_T((ρ-K)₋) ≤ ¼(1 - e^{-KT/2})`.
    B,
}

impl std::str::FromStr for KatoVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(KatoVariant::A),
            "b" => Ok(KatoVariant::B),
            other => Err(Error::Domain(format!("unknown Kato variant `{other}`"))),
        }
    }
}

pub fn threshold_a(k: f64, t: f64) -> f64 {
    0.5 * (1.0 - (-k * t / 4.0).exp())
}

pub fn threshold_b(k: f64, t: f64) -> f64 {
    0.25 * (1.0 - (-k * t / 2.0).exp())
}

/// Kato constant of `(ρ - K)₋` compared against a threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KatoResult {
    pub potential: String,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub value: f64,
    pub quad_error: f64,
    pub threshold_a: f64,
    pub threshold_b: f64,
    pub variant: KatoVariant,
    pub strict: bool,
    pub admissible: bool,
}

/// `W(x) = (ρ(x) - K)₋ = -min(0, ρ(x) - K)`.
pub fn negative_part_below(rho: &[f64], k: f64) -> Vec<f64> {
    rho.iter().map(|&r| -(r - k).min(0.0)).collect()
}

pub fn kato_condition_check(
    g: &MeasuredWeightedGraph,
    rho: &[f64],
    k: f64,
    t: f64,
    variant: KatoVariant,
    strict: bool,
) -> Result<KatoResult> {
    kato_condition_check_with(&Semigroup::heat(g)?, rho, k, t, variant, strict, DEFAULT_QUAD_TOL)
}

pub fn kato_condition_check_with(
    heat: &Semigroup,
    rho: &[f64],
    k: f64,
    t: f64,
    variant: KatoVariant,
    strict: bool,
    tol: f64,
) -> Result<KatoResult> {
    if !(k > 0.0 && k.is_finite() && t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("K and T must be positive, got K={k}, T={t}")));
    }
    let w = negative_part_below(rho, k);
    let kc = kato_constant_with(heat, &w, t, tol)?;
    let (ta, tb) = (threshold_a(k, t), threshold_b(k, t));
    let threshold = match variant {
        KatoVariant::A => ta,
        KatoVariant::B => tb,
    };
    let admissible = if strict {
        kc.value < threshold
    } else {
        kc.value <= threshold
    };
    Ok(KatoResult {
        potential: format!("(rho - {k})_-"),
        k,
        t,
        value: kc.value,
        quad_error: kc.quad_error,
        threshold_a: ta,
        threshold_b: tb,
        variant,
        strict,
        admissible,
    })
}

/// All `(K, T)` grid pairs passing the non-strict Kato check, sorted by `K`
/// descending, then `T` ascending.
pub fn kato_window_search(
    g: &MeasuredWeightedGraph,
    rho: &[f64],
    k_grid: &[f64],
    t_grid: &[f64],
    variant: KatoVariant,
) -> Result<Vec<(f64, f64)>> {
    let heat = Semigroup::heat(g)?;
    let mut out = Vec::new();
    for &k in k_grid {
        for &t in t_grid {
            let r = kato_condition_check_with(&heat, rho, k, t, variant, false, DEFAULT_QUAD_TOL)?;
            if r.admissible {
                out.push((k, t));
            }
        }
    }
    out.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.total_cmp(&b.1)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_function, random_graph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn two_vertex() -> MeasuredWeightedGraph {
        MeasuredWeightedGraph::from_edges(vec!["x".into(), "y".into()], vec![1.0, 1.0], &[(0, 1, 1.0)]).unwrap()
    }

    #[test]
    fn heat_preserves_constants() {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(1), 9);
        let p = Semigroup::heat(&g).unwrap();
        for t in [0.0, 0.1, 1.0, 10.0] {
            for v in p.apply(t, &vec![1.0; g.len()]) {
                assert!((v - 1.0).abs() < 1e-12);
            }
            assert!((p.sup_norm(t) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn two_vertex_closed_form() {
        let g = two_vertex();
        for t in [0.0, 0.3, 1.0, 4.0] {
            let r = heat_apply(&g, t, &[0.0, 1.0]).unwrap();
            assert!((r[0] - (0.5 - 0.5 * (-2.0 * t).exp())).abs() < 1e-14);
        }
    }

    #[test]
    fn constant_potential_is_a_scalar_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = random_graph(&mut rng, 7);
        let f = random_function(&mut rng, g.len());
        let c = 0.7;
        let pw = Semigroup::new(&g, &vec![c; g.len()]).unwrap();
        let p = Semigroup::heat(&g).unwrap();
        for t in [0.0, 0.5, 2.0] {
            let a = pw.apply(t, &f);
            let b = p.apply(t, &f);
            for (u, v) in a.iter().zip(&b) {
                assert!((u - (-c * t).exp() * v).abs() < 1e-12);
            }
            assert!((pw.sup_norm(t) - (-c * t).exp()).abs() < 1e-12);
        }
        assert_eq!(
            semigroup_sup_norm(&g, &random_function(&mut rng, g.len()), 0.0).unwrap(),
            1.0
        );
    }

    #[test]
    fn rejects_negative_time() {
        assert!(heat_apply(&two_vertex(), -1.0, &[0.0, 1.0]).is_err());
    }

    #[test]
    fn semigroup_law() {
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(30 + seed);
            let g = random_graph(&mut rng, 8);
            let w: Vec<f64> = (0..g.len()).map(|_| rng.random_range(-1.0..2.0)).collect();
            let f = random_function(&mut rng, g.len());
            let (s, t) = (rng.random_range(0.0..2.0), rng.random_range(0.0..2.0));
            for sg in [Semigroup::heat(&g).unwrap(), Semigroup::new(&g, &w).unwrap()] {
                let direct = sg.apply(s + t, &f);
                let composed = sg.apply(s, &sg.apply(t, &f));
                for (a, b) in direct.iter().zip(&composed) {
                    assert!((a - b).abs() <= 1e-8 * (1.0 + a.abs()));
                }
            }
        }
    }

    #[test]
    fn positivity_and_domination() {
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(60 + seed);
            let g = random_graph(&mut rng, 8);
            let w1: Vec<f64> = (0..g.len()).map(|_| rng.random_range(0.0..1.0)).collect();
            let w2: Vec<f64> = w1.iter().map(|v| v + rng.random_range(0.0..1.0)).collect();
            let signed: Vec<f64> = (0..g.len()).map(|_| rng.random_range(-2.0..2.0)).collect();
            let f: Vec<f64> = (0..g.len()).map(|_| rng.random_range(0.0..1.0)).collect();
            let (p1, p2, ps) = (
                Semigroup::new(&g, &w1).unwrap(),
                Semigroup::new(&g, &w2).unwrap(),
                Semigroup::new(&g, &signed).unwrap(),
            );
            for t in [0.01, 0.5, 3.0] {
                assert!(ps.apply(t, &f).iter().all(|&v| v >= -1e-12));
                let (a, b) = (p1.apply(t, &f), p2.apply(t, &f));
                for (u, v) in a.iter().zip(&b) {
                    assert!(*v <= u + 1e-12);
                }
            }
        }
    }

    #[test]
    fn kato_trivial_cases() {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(3), 6);
        assert_eq!(kato_constant(&g, &vec![0.0; g.len()], 2.0, 1e-9).unwrap().value, 0.0);
        let k = kato_constant(&g, &vec![0.3; g.len()], 2.0, 1e-9).unwrap();
        assert!((k.value - 0.6).abs() < 1e-9);
        let mut w = vec![0.0; g.len()];
        w[0] = -1.0;
        assert!(matches!(kato_constant(&g, &w, 1.0, 1e-9), Err(Error::Domain(_))));
    }

    #[test]
    fn kato_two_vertex_closed_form() {
        let g = two_vertex();
        for (a, t) in [(1.0, 1.0), (0.5, 3.0), (2.0, 0.2)] {
            let k = kato_constant(&g, &[0.0, a], t, 1e-10).unwrap();
            let exact = 0.5 * a * (t + 0.5 * (1.0 - (-2.0 * t).exp()));
            assert!((k.value - exact).abs() < 1e-9, "{} vs {exact}", k.value);
            assert!(k.value <= t * a);
        }
    }

    #[test]
    fn kato_monotone_in_horizon_and_potential() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let g = random_graph(&mut rng, 7);
        let w1: Vec<f64> = (0..g.len()).map(|_| rng.random_range(0.0..1.0)).collect();
        let w2: Vec<f64> = w1.iter().map(|v| v + rng.random_range(0.0..0.5)).collect();
        let a = kato_constant(&g, &w1, 1.0, 1e-10).unwrap().value;
        let b = kato_constant(&g, &w1, 1.5, 1e-10).unwrap().value;
        let c = kato_constant(&g, &w2, 1.0, 1e-10).unwrap().value;
        assert!(a <= b + 1e-9 && a <= c + 1e-9);
    }

    #[test]
    fn kato_checks() {
        let g = two_vertex();
        let r = kato_condition_check(&g, &[3.0, 3.0], 1.0, 1.0, KatoVariant::B, false).unwrap();
        assert!(r.admissible && r.value == 0.0);
        // ρ ≡ 0 with K = 1 gives W ≡ 1 and k_T = T.
        let r = kato_condition_check(&g, &[0.0, 0.0], 1.0, 1.0, KatoVariant::B, false).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
        assert!(!r.admissible);
        assert!((r.threshold_b - 0.25 * (1.0 - (-0.5f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn window_search() {
        let g = two_vertex();
        let ks = [0.5, 1.0, 2.0];
        let ts = [0.5, 1.0];
        let all = kato_window_search(&g, &[5.0, 5.0], &ks, &ts, KatoVariant::A).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], (2.0, 0.5));
        let none = kato_window_search(&g, &[-1.0, -1.0], &ks, &ts, KatoVariant::B).unwrap();
        assert!(none.is_empty());
    }
}

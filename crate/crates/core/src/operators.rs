//! Laplacian, carré du champ `Γ` and iterated form `Γ₂`.
//!
//! Functions on the vertex set are plain slices indexed in canonical vertex
//! order. `Δf(x) = Σ_y q(x,y)(f(y) - f(x))` and `L = -Δ`.

use nalgebra::{DMatrix, DVector};

use crate::graph::MeasuredWeightedGraph;

/// `Δf`.
pub fn laplacian_apply(g: &MeasuredWeightedGraph, f: &[f64]) -> Vec<f64> {
    (0..g.len()).map(|x| laplacian_at(g, f, x)).collect()
}

#[inline]
pub fn laplacian_at(g: &MeasuredWeightedGraph, f: &[f64], x: usize) -> f64 {
    g.neighbors(x).iter().map(|&y| g.q(x, y) * (f[y] - f[x])).sum()
}

/// Matrix of the non-negative Laplacian `L` acting on column vectors.
pub fn laplacian_matrix(g: &MeasuredWeightedGraph) -> DMatrix<f64> {
    let n = g.len();
    DMatrix::from_fn(n, n, |i, j| if i == j { g.degree(i) } else { -g.q(i, j) })
}

/// `S = M^{1/2} L M^{-1/2}` with `M = diag(m)`. Symmetric, with the spectrum
/// of `L` on `ℓ²(V, m)`.
pub fn symmetrized_laplacian(g: &MeasuredWeightedGraph) -> DMatrix<f64> {
    let n = g.len();
    let m = g.measure();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            g.degree(i)
        } else {
            let w = g.weight(i, j);
            if w == 0.0 {
                0.0
            } else if m[i] == m[j] {
                -w / m[i]
            } else {
                -w / (m[i] * m[j]).sqrt()
            }
        }
    })
}

/// `Γ(f,h) = ½(Δ(fh) - fΔh - hΔf)`, evaluated literally.
pub fn gamma(g: &MeasuredWeightedGraph, f: &[f64], h: &[f64]) -> Vec<f64> {
    let fh: Vec<f64> = f.iter().zip(h).map(|(a, b)| a * b).collect();
    let lap_fh = laplacian_apply(g, &fh);
    let lap_f = laplacian_apply(g, f);
    let lap_h = laplacian_apply(g, h);
    (0..g.len())
        .map(|x| 0.5 * (lap_fh[x] - f[x] * lap_h[x] - h[x] * lap_f[x]))
        .collect()
}

/// `Γ(f,h)(x) = ½ Σ_y q(x,y)(f(y) - f(x))(h(y) - h(x))`.
#[inline]
pub fn gamma_at(g: &MeasuredWeightedGraph, f: &[f64], h: &[f64], x: usize) -> f64 {
    0.5 * g
        .neighbors(x)
        .iter()
        .map(|&y| g.q(x, y) * (f[y] - f[x]) * (h[y] - h[x]))
        .sum::<f64>()
}

/// Closed form of `Γ` at every vertex.
pub fn gamma_closed(g: &MeasuredWeightedGraph, f: &[f64], h: &[f64]) -> Vec<f64> {
    (0..g.len()).map(|x| gamma_at(g, f, h, x)).collect()
}

/// `Γ₂(f,h) = ½(ΔΓ(f,h) - Γ(f,Δh) - Γ(h,Δf))`, evaluated from the operator
/// definitions at every vertex.
pub fn gamma2(g: &MeasuredWeightedGraph, f: &[f64], h: &[f64]) -> Vec<f64> {
    let gfh = gamma(g, f, h);
    let lap_gfh = laplacian_apply(g, &gfh);
    let lap_f = laplacian_apply(g, f);
    let lap_h = laplacian_apply(g, h);
    let g_f_laph = gamma(g, f, &lap_h);
    let g_h_lapf = gamma(g, h, &lap_f);
    (0..g.len())
        .map(|x| 0.5 * (lap_gfh[x] - g_f_laph[x] - g_h_lapf[x]))
        .collect()
}

/// `Γ₂(f,h)(x)` using only values of `f` and `h` on `B_2(x)`.
pub fn gamma2_at(g: &MeasuredWeightedGraph, f: &[f64], h: &[f64], x: usize) -> f64 {
    let gamma_x = gamma_at(g, f, h, x);
    let lap_f_x = laplacian_at(g, f, x);
    let lap_h_x = laplacian_at(g, h, x);
    let mut lap_gamma = 0.0;
    let mut cross = 0.0;
    for &y in g.neighbors(x) {
        let q = g.q(x, y);
        lap_gamma += q * (gamma_at(g, f, h, y) - gamma_x);
        let dlap_h = laplacian_at(g, h, y) - lap_h_x;
        let dlap_f = laplacian_at(g, f, y) - lap_f_x;
        cross += q * ((f[y] - f[x]) * dlap_h + (h[y] - h[x]) * dlap_f);
    }
    0.5 * (lap_gamma - 0.5 * cross)
}

/// Matrices of the quadratic forms `f ↦ Γ₂(f)(x)`, `f ↦ Γ(f)(x)` and the
/// linear form `f ↦ Δf(x)` on functions supported in `B_2(x)` with
/// `f(x) = 0`.
///
/// All three forms are invariant under adding constants, so fixing the
/// center value loses nothing.
#[derive(Debug, Clone)]
pub struct LocalForms {
    pub center: usize,
    /// `B_2(center)` without the center, canonical order.
    pub basis: Vec<usize>,
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub c: DVector<f64>,
}

impl LocalForms {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `A - (1/n) c cᵀ - k B`. `n = ∞` drops the dimension term.
    pub fn pencil(&self, n: f64, k: f64) -> DMatrix<f64> {
        let mut p = &self.a - &self.b * k;
        if n.is_finite() {
            p -= (&self.c * self.c.transpose()) / n;
        }
        p
    }

    /// Max-abs entry norm of `A`.
    pub fn a_norm(&self) -> f64 {
        self.a.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Extends local coordinates to a function on the whole graph, zero
    /// at the center and outside `B_2(center)`.
    pub fn lift(&self, graph_len: usize, coords: &[f64]) -> Vec<f64> {
        let mut f = vec![0.0; graph_len];
        for (&v, &val) in self.basis.iter().zip(coords) {
            f[v] = val;
        }
        f
    }
}

/// Assembles [`LocalForms`] at `x` by evaluating `Γ₂`, `Γ` and `Δ` on pairs
/// of basis indicator functions.
pub fn local_forms(g: &MeasuredWeightedGraph, x: usize) -> LocalForms {
    let n = g.len();
    let basis: Vec<usize> = g.ball(x, 2).into_iter().skip(1).collect();
    let k = basis.len();
    let indicators: Vec<Vec<f64>> = basis
        .iter()
        .map(|&v| {
            let mut e = vec![0.0; n];
            e[v] = 1.0;
            e
        })
        .collect();

    let mut a = DMatrix::zeros(k, k);
    let mut b = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let a_ij = gamma2_at(g, &indicators[i], &indicators[j], x);
            let b_ij = gamma_at(g, &indicators[i], &indicators[j], x);
            a[(i, j)] = a_ij;
            a[(j, i)] = a_ij;
            b[(i, j)] = b_ij;
            b[(j, i)] = b_ij;
        }
    }
    let c = DVector::from_iterator(k, indicators.iter().map(|e| laplacian_at(g, e, x)));
    LocalForms {
        center: x,
        basis,
        a,
        b,
        c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_function, random_graph};
    use crate::graph::paper_example;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn two_vertex() -> MeasuredWeightedGraph {
        MeasuredWeightedGraph::from_edges(vec!["x".into(), "y".into()], vec![1.0, 1.0], &[(0, 1, 1.0)]).unwrap()
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn laplacian_examples() {
        let g = two_vertex();
        assert_eq!(laplacian_apply(&g, &[0.0, 1.0]), vec![1.0, -1.0]);
        assert_eq!(laplacian_apply(&g, &[3.0, 3.0]), vec![0.0, 0.0]);

        let p = paper_example(1.0).unwrap();
        let lap = laplacian_apply(&p, &[1.0, 0.0, 0.0]);
        // q(x,y) = 1 / 1
        assert_eq!(lap[0], -1.0);
    }

    #[test]
    fn symmetrized_laplacian_examples() {
        let g = two_vertex();
        assert_eq!(symmetrized_laplacian(&g), laplacian_matrix(&g));

        let g =
            MeasuredWeightedGraph::from_edges(vec!["x".into(), "y".into()], vec![1.0, 4.0], &[(0, 1, 1.0)]).unwrap();
        let s = symmetrized_laplacian(&g);
        let mut ev: Vec<f64> = s.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        assert!(ev[0].abs() < 1e-14);
        assert!((ev[1] - 1.25).abs() < 1e-14);

        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(3), 9);
        let s = symmetrized_laplacian(&g);
        let ground = DVector::from_iterator(g.len(), g.measure().iter().map(|m| m.sqrt()));
        assert!((&s * ground).amax() < 1e-12);
        assert!((&s - s.transpose()).amax() <= 1e-12 * s.amax());
    }

    #[test]
    fn gamma_two_vertex() {
        let g = two_vertex();
        let f = [0.0, 1.0];
        assert_eq!(gamma(&g, &f, &f)[0], 0.5);
        assert_eq!(gamma_closed(&g, &f, &f)[0], 0.5);
        assert_eq!(gamma2(&g, &f, &f)[0], 1.0);
        assert_eq!(gamma2_at(&g, &f, &f, 0), 1.0);
    }

    #[test]
    fn gamma_is_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = random_graph(&mut rng, 10);
        for _ in 0..100 {
            let f = random_function(&mut rng, g.len());
            assert!(gamma(&g, &f, &f).iter().all(|&v| v >= -1e-12));
        }
    }

    #[test]
    fn closed_form_and_local_gamma2_match_definitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let g = random_graph(&mut rng, 8);
            let f = random_function(&mut rng, g.len());
            let h = random_function(&mut rng, g.len());
            let prod = gamma(&g, &f, &h);
            let closed = gamma_closed(&g, &f, &h);
            let g2 = gamma2(&g, &f, &h);
            for x in 0..g.len() {
                assert!(rel_close(prod[x], closed[x], 1e-10));
                assert!(rel_close(g2[x], gamma2_at(&g, &f, &h, x), 1e-10));
            }
        }
    }

    #[test]
    fn local_forms_two_vertex() {
        let lf = local_forms(&two_vertex(), 0);
        assert_eq!(lf.basis, vec![1]);
        assert_eq!(lf.a[(0, 0)], 1.0);
        assert_eq!(lf.b[(0, 0)], 0.5);
        assert_eq!(lf.c[0], 1.0);
    }

    #[test]
    fn local_forms_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = random_graph(&mut rng, 11);
        for x in 0..g.len() {
            let lf = local_forms(&g, x);
            for (i, &v) in lf.basis.iter().enumerate() {
                for j in 0..lf.dim() {
                    let expected = if i == j && g.distance(x, v) == 1 {
                        0.5 * g.q(x, v)
                    } else {
                        0.0
                    };
                    assert_eq!(lf.b[(i, j)], expected);
                }
            }
            assert_eq!(lf.a, lf.a.transpose());
        }
    }

    #[test]
    fn local_forms_reproduce_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..5 {
            let g = random_graph(&mut rng, 10);
            for x in 0..g.len() {
                let lf = local_forms(&g, x);
                for _ in 0..5 {
                    let coords = random_function(&mut rng, lf.dim());
                    let f = lf.lift(g.len(), &coords);
                    let v = DVector::from_column_slice(&coords);
                    let quad_a = v.dot(&(&lf.a * &v));
                    let quad_b = v.dot(&(&lf.b * &v));
                    let lin_c = lf.c.dot(&v);
                    let g2 = gamma2(&g, &f, &f)[x];
                    let g1 = gamma(&g, &f, &f)[x];
                    let lap = laplacian_apply(&g, &f)[x];
                    assert!((quad_a - g2).abs() <= 1e-9 * (1.0 + quad_a.abs()));
                    assert!((quad_b - g1).abs() <= 1e-9 * (1.0 + quad_b.abs()));
                    assert!((lin_c * lin_c - lap * lap).abs() <= 1e-9 * (1.0 + lap * lap));
                }
            }
        }
    }

    #[test]
    fn constant_invariance() {
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
            let g = random_graph(&mut rng, 9);
            let f = random_function(&mut rng, g.len());
            let shift = 3.7 * (seed as f64 + 1.0);
            let fs: Vec<f64> = f.iter().map(|v| v + shift).collect();
            let pairs = [
                (gamma(&g, &f, &f), gamma(&g, &fs, &fs)),
                (gamma2(&g, &f, &f), gamma2(&g, &fs, &fs)),
                (laplacian_apply(&g, &f), laplacian_apply(&g, &fs)),
            ];
            for (a, b) in pairs {
                for (u, v) in a.iter().zip(&b) {
                    assert!((u - v).abs() <= 1e-10 * (1.0 + u.abs()), "{u} vs {v}");
                }
            }
        }
    }

    #[test]
    fn green_identity() {
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(200 + seed);
            let g = random_graph(&mut rng, 10);
            let f = random_function(&mut rng, g.len());
            let energy: f64 = gamma(&g, &f, &f).iter().zip(g.measure()).map(|(v, m)| v * m).sum();
            let lf = laplacian_apply(&g, &f);
            let inner: f64 = (0..g.len()).map(|x| -lf[x] * f[x] * g.measure()[x]).sum();
            assert!((energy - inner).abs() <= 1e-9 * energy.abs().max(inner.abs()));
        }
    }

    #[test]
    fn spectrum_within_degree_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let g = random_graph(&mut rng, 10);
            let bound = 2.0 * g.max_degree();
            for ev in symmetrized_laplacian(&g).symmetric_eigenvalues().iter() {
                assert!(*ev >= -1e-12 && *ev <= bound * (1.0 + 1e-12));
            }
        }
    }
}

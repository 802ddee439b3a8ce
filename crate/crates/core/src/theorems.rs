//! Numerical verification of the curvature theorems.
//!
//! Each check evaluates its hypotheses (curvature-dimension inequality,
//! spectral positivity, Kato smallness of `(ρ - K)₋`) and, when they hold,
//! both sides of the conclusion on seeded random functions and a time grid.
//! A report never passes when a hypothesis fails.

use std::str::FromStr;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::curvature::{cd_verify_with_tol, Dimension};
use crate::error::{Error, Result};
use crate::generators::random_function;
use crate::graph::MeasuredWeightedGraph;
use crate::operators::gamma_closed;
use crate::report::{json_f64, CheckReport, ReportBuilder, DEFAULT_TOL_REPORT};
use crate::semigroup::{kato_condition_check_with, KatoResult, KatoVariant, Semigroup, DEFAULT_QUAD_TOL};
use crate::spectral::{
    cheeger_constant, ground_state, lambda1, laplacian_spectrum, spectral_positivity, CHEEGER_MAX_VERTICES,
};

/// Default time grid, as multiples of `T`.
pub const DEFAULT_T_GRID_FACTORS: [f64; 7] = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 3.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub n: Dimension,
    pub samples: usize,
    pub seed: u64,
    pub t_grid: Vec<f64>,
    pub tol_report: f64,
}

impl VerifyConfig {
    /// Config with the default time grid and tolerance.
    pub fn new(k: f64, t: f64) -> Result<Self> {
        let cfg = VerifyConfig {
            k,
            t,
            n: Dimension::INFINITE,
            samples: 20,
            seed: 42,
            t_grid: DEFAULT_T_GRID_FACTORS.iter().map(|f| f * t).collect(),
            tol_report: DEFAULT_TOL_REPORT,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(Error::Domain(format!("K must be positive, got {}", self.k)));
        }
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(Error::Domain(format!("T must be positive, got {}", self.t)));
        }
        if self.samples == 0 {
            return Err(Error::Domain("samples must be at least 1".into()));
        }
        if !(self.tol_report >= 0.0 && self.tol_report.is_finite()) {
            return Err(Error::Domain("tol_report must be non-negative".into()));
        }
        if self.t_grid.is_empty() {
            return Err(Error::Domain("t_grid must not be empty".into()));
        }
        if let Some(t) = self.t_grid.iter().find(|&&t| !(t > 0.0 && t <= 3.0 * self.t)) {
            return Err(Error::Domain(format!("t_grid entry {t} outside (0, 3T]")));
        }
        Ok(())
    }
}

/// Named check selections accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Lichnerowicz,
    Gradient,
    Supnorm,
    Harnack,
    Semigroup,
    Diameter,
    L1,
    Buser,
    Cover,
}

impl Suite {
    pub const ALL_CHECKS: [Suite; 9] = [
        Suite::Lichnerowicz,
        Suite::Gradient,
        Suite::Supnorm,
        Suite::Harnack,
        Suite::Semigroup,
        Suite::Diameter,
        Suite::L1,
        Suite::Buser,
        Suite::Cover,
    ];

    pub fn checks(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::ALL_CHECKS.to_vec(),
            other => vec![other],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "lichnerowicz" => Suite::Lichnerowicz,
            "gradient" => Suite::Gradient,
            "supnorm" => Suite::Supnorm,
            "harnack" => Suite::Harnack,
            "semigroup" => Suite::Semigroup,
            "diameter" => Suite::Diameter,
            "l1" => Suite::L1,
            "buser" => Suite::Buser,
            "cover" => Suite::Cover,
            other => return Err(Error::Domain(format!("unknown suite `{other}`"))),
        })
    }
}

/// Shared state for the checks on one `(graph, ρ, config)` triple. Derived
/// quantities are computed once and reused across checks.
pub struct Verifier<'a> {
    g: &'a MeasuredWeightedGraph,
    rho: &'a [f64],
    cfg: &'a VerifyConfig,
    cd: OnceLock<Result<CheckReport>>,
    heat: OnceLock<Result<Semigroup>>,
    kato: [OnceLock<Result<KatoResult>>; 3],
}

const KATO_A: usize = 0;
const KATO_B: usize = 1;
const KATO_B_STRICT: usize = 2;

impl<'a> Verifier<'a> {
    pub fn new(g: &'a MeasuredWeightedGraph, rho: &'a [f64], cfg: &'a VerifyConfig) -> Result<Self> {
        cfg.validate()?;
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
        Ok(Verifier {
            g,
            rho,
            cfg,
            cd: OnceLock::new(),
            heat: OnceLock::new(),
            kato: Default::default(),
        })
    }

    fn builder(&self, check: &str) -> ReportBuilder {
        let mut b = ReportBuilder::new(check, self.cfg.seed, self.cfg.tol_report);
        b.detail_f64("K", self.cfg.k);
        b.detail_f64("T", self.cfg.t);
        b.detail("n", self.cfg.n.to_string());
        b
    }

    fn with_grid(&self, b: &mut ReportBuilder) {
        b.detail(
            "t_grid",
            Value::Array(self.cfg.t_grid.iter().map(|&t| json_f64(t)).collect()),
        );
    }

    /// Sampled `CD(ρ, n)` report used as a hypothesis gate.
    pub fn curvature_dimension(&self) -> Result<&CheckReport> {
        self.cd
            .get_or_init(|| {
                cd_verify_with_tol(
                    self.g,
                    self.rho,
                    self.cfg.n,
                    self.cfg.samples,
                    self.cfg.seed,
                    self.cfg.tol_report,
                )
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn cd_gate(&self, b: &mut ReportBuilder) -> Result<bool> {
        let cd = self.curvature_dimension()?;
        if let Some(s) = cd.min_slack {
            b.detail_f64("cd_min_slack", s);
        }
        Ok(b.hypothesis("curvature_dimension", cd.passed))
    }

    fn heat(&self) -> Result<&Semigroup> {
        self.heat
            .get_or_init(|| Semigroup::heat(self.g))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn kato(&self, variant: KatoVariant, strict: bool) -> Result<&KatoResult> {
        let slot = match (variant, strict) {
            (KatoVariant::A, _) => KATO_A,
            (KatoVariant::B, false) => KATO_B,
            (KatoVariant::B, true) => KATO_B_STRICT,
        };
        self.kato[slot]
            .get_or_init(|| {
                let heat = self.heat()?;
                kato_condition_check_with(
                    heat,
                    self.rho,
                    self.cfg.k,
                    self.cfg.t,
                    variant,
                    strict,
                    DEFAULT_QUAD_TOL,
                )
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn kato_gate(&self, b: &mut ReportBuilder, variant: KatoVariant, strict: bool) -> Result<bool> {
        let r = self.kato(variant, strict)?;
        b.detail_f64("kato_value", r.value);
        b.detail_f64("kato_quad_error", r.quad_error);
        let (name, threshold) = match variant {
            KatoVariant::A => ("kato_a", r.threshold_a),
            KatoVariant::B if strict => ("kato_b_strict", r.threshold_b),
            KatoVariant::B => ("kato_b", r.threshold_b),
        };
        b.detail_f64("kato_threshold", threshold);
        Ok(b.hypothesis(name, r.admissible))
    }

    fn random_functions(&self) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        (0..self.cfg.samples)
            .map(|_| random_function(&mut rng, self.g.len()))
            .collect()
    }

    /// `λ₁ ≥ E` with `E = λ_min(L/2 + ρ)` whenever `E > 0` and `CD(ρ, n)`.
    pub fn lichnerowicz(&self) -> Result<CheckReport> {
        let mut b = self.builder("lichnerowicz");
        self.cd_gate(&mut b)?;
        let (e, positive) = spectral_positivity(self.g, self.rho)?;
        b.detail_f64("E", e);
        if b.hypothesis("spectral_positivity", positive) {
            let gs = ground_state(self.g, self.rho)?;
            b.detail("perron_positive", gs.positive);
            b.detail_f64("ground_state_residual", gs.residual);
            let l1 = lambda1(self.g)?;
            b.detail_f64("lambda1", l1);
            b.tracker().observe(e, l1, || "lambda1 >= E".into());
            b.samples(1);
        }
        Ok(b.finish())
    }

    /// Pointwise gradient estimates (i), (ii) and (iii).
    pub fn gradient_estimates(&self) -> Result<CheckReport> {
        let mut b = self.builder("gradient");
        self.with_grid(&mut b);
        if !self.cd_gate(&mut b)? {
            return Ok(b.finish());
        }
        let g = self.g;
        let k = self.cfg.k;
        let heat = self.heat()?;
        let two_rho: Vec<f64> = self.rho.iter().map(|r| 2.0 * r).collect();
        let minus_two_neg: Vec<f64> = self.rho.iter().map(|r| 2.0 * r.min(0.0)).collect();
        let two_rho_capped: Vec<f64> = self.rho.iter().map(|r| 2.0 * r.min(k)).collect();
        let p_2rho = Semigroup::new(g, &two_rho)?;
        let p_neg = Semigroup::new(g, &minus_two_neg)?;
        let p_capped = Semigroup::new(g, &two_rho_capped)?;

        let fs = self.random_functions();
        let mut trackers = [
            crate::report::SlackTracker::new(),
            Default::default(),
            Default::default(),
        ];
        for (s, f) in fs.iter().enumerate() {
            let gamma_f = gamma_closed(g, f, f);
            let f_sq: Vec<f64> = f.iter().map(|v| v * v).collect();
            for &t in &self.cfg.t_grid {
                let pf = heat.apply(t, f);
                let gamma_pf = gamma_closed(g, &pf, &pf);
                let rhs_i = p_2rho.apply(t, &gamma_f);
                let neg_fsq = p_neg.apply(t, &f_sq);
                let capped_fsq = p_capped.apply(t, &f_sq);
                let growth = (2.0 * k * t).exp();
                let coeff_iii = (2.0 * k * t).exp_m1() / (2.0 * k);
                for x in 0..g.len() {
                    let ctx = |item: &str| {
                        let id = g.id(x).to_string();
                        let item = item.to_string();
                        move || format!("({item}) sample {s}, t={t}, vertex {id}")
                    };
                    trackers[0].observe(gamma_pf[x], rhs_i[x], ctx("i"));
                    trackers[1].observe(2.0 * t * gamma_pf[x], neg_fsq[x] - pf[x] * pf[x], ctx("ii"));
                    trackers[2].observe(
                        coeff_iii * gamma_pf[x],
                        growth * capped_fsq[x] - pf[x] * pf[x],
                        ctx("iii"),
                    );
                }
            }
        }
        for (name, tr) in ["slack_i", "slack_ii", "slack_iii"].iter().zip(&trackers) {
            if let Some(s) = tr.min_slack() {
                b.detail_f64(name, s);
            }
        }
        for tr in trackers {
            b.tracker().merge(tr);
        }
        b.samples(fs.len());
        Ok(b.finish())
    }

    /// `ΓP_t f ≤ K e^{KT}/sinh(Kt) ‖f‖²_∞ ≤ e^{KT}/t ‖f‖²_∞`.
    pub fn gradient_supnorm(&self) -> Result<CheckReport> {
        let mut b = self.builder("supnorm");
        self.with_grid(&mut b);
        let cd = self.cd_gate(&mut b)?;
        let kato = self.kato_gate(&mut b, KatoVariant::B, false)?;
        if !(cd && kato) {
            return Ok(b.finish());
        }
        let (k, big_t) = (self.cfg.k, self.cfg.t);
        let heat = self.heat()?;
        let fs = self.random_functions();
        let mut scalar = crate::report::SlackTracker::new();
        for &t in &self.cfg.t_grid {
            let sinh_bound = k * (k * big_t).exp() / (k * t).sinh();
            let simple_bound = (k * big_t).exp() / t;
            scalar.observe(sinh_bound, simple_bound, || format!("sinh bound vs 1/t bound, t={t}"));
        }
        if let Some(s) = scalar.min_slack() {
            b.detail_f64("scalar_bound_order_slack", s);
        }
        for (s, f) in fs.iter().enumerate() {
            let sup_sq = f.iter().fold(0.0f64, |a, v| a.max(v.abs())).powi(2);
            for &t in &self.cfg.t_grid {
                let pf = heat.apply(t, f);
                let gamma_pf = gamma_closed(self.g, &pf, &pf);
                let sinh_bound = k * (k * big_t).exp() / (k * t).sinh() * sup_sq;
                let simple_bound = (k * big_t).exp() / t * sup_sq;
                for (x, &lhs) in gamma_pf.iter().enumerate() {
                    b.tracker().observe(lhs, sinh_bound, || {
                        format!("sinh bound, sample {s}, t={t}, vertex {}", self.g.id(x))
                    });
                    b.tracker().observe(lhs, simple_bound, || {
                        format!("1/t bound, sample {s}, t={t}, vertex {}", self.g.id(x))
                    });
                }
            }
        }
        b.tracker().merge(scalar);
        b.samples(fs.len());
        Ok(b.finish())
    }

    /// `‖Γf‖_∞ ≤ 2 e^{1+TK} λ ‖f‖²_∞` for every eigenpair of `L` with `λ > 0`.
    pub fn eigenfunction_harnack(&self) -> Result<CheckReport> {
        let mut b = self.builder("harnack");
        let cd = self.cd_gate(&mut b)?;
        let kato = self.kato_gate(&mut b, KatoVariant::B, false)?;
        if !(cd && kato) {
            return Ok(b.finish());
        }
        let spec = laplacian_spectrum(self.g)?;
        let factor = 2.0 * (1.0 + self.cfg.t * self.cfg.k).exp();
        // Index 0 is the constant eigenfunction (λ = 0, Γf = 0); it is skipped.
        let mut checked = 0;
        for (idx, &lambda) in spec.values.iter().enumerate().skip(1) {
            let f = spec.function(idx);
            let gamma_sup = gamma_closed(self.g, &f, &f).into_iter().fold(0.0, f64::max);
            let sup_sq = f.iter().fold(0.0f64, |a, v| a.max(v.abs())).powi(2);
            b.tracker().observe(gamma_sup, factor * lambda * sup_sq, || {
                format!("eigenpair {idx}, lambda={lambda}")
            });
            checked += 1;
        }
        b.detail("skipped_eigenpairs", 1);
        b.samples(checked);
        Ok(b.finish())
    }

    /// Spectral positivity and sup-norm decay of `P^ρ` (variant A) and
    /// `P^{2ρ}` (variant B).
    pub fn semigroup_bounds(&self) -> Result<CheckReport> {
        let mut b = self.builder("semigroup");
        self.with_grid(&mut b);
        let cd = self.cd_gate(&mut b)?;
        let kato_a = self.kato_gate(&mut b, KatoVariant::A, false)?;
        let kato_b = self.kato(KatoVariant::B, false)?.admissible;
        b.detail("kato_b_holds", kato_b);
        if !(cd && kato_a) {
            return Ok(b.finish());
        }
        let (k, big_t) = (self.cfg.k, self.cfg.t);
        let (e, _) = spectral_positivity(self.g, self.rho)?;
        b.detail_f64("E", e);
        b.tracker().observe(0.5 * k, e, || "E >= K/2".into());
        let p_rho = Semigroup::new(self.g, self.rho)?;
        for &t in &self.cfg.t_grid {
            let bound = (k * (big_t - t) / 2.0).exp();
            b.tracker()
                .observe_scaled(p_rho.sup_norm(t), bound, bound, || format!("||P_t^rho|| at t={t}"));
        }
        if kato_b {
            let two_rho: Vec<f64> = self.rho.iter().map(|r| 2.0 * r).collect();
            let p_2rho = Semigroup::new(self.g, &two_rho)?;
            for &t in &self.cfg.t_grid {
                let bound = (k * (big_t - t)).exp();
                b.tracker()
                    .observe_scaled(p_2rho.sup_norm(t), bound, bound, || format!("||P_t^2rho|| at t={t}"));
            }
        }
        b.samples(self.cfg.t_grid.len());
        Ok(b.finish())
    }

    /// `diam(G) ≤ 4 Deg_max e^{KT/2} / K`.
    pub fn diameter(&self) -> Result<CheckReport> {
        let mut b = self.builder("diameter");
        let cd = self.cd_gate(&mut b)?;
        let kato = self.kato_gate(&mut b, KatoVariant::B, false)?;
        let diam = self.g.diameter();
        b.detail("diameter", diam);
        if cd && kato {
            let bound = 4.0 * self.g.max_degree() * (self.cfg.k * self.cfg.t / 2.0).exp() / self.cfg.k;
            b.detail_f64("bound", bound);
            b.tracker().observe(diam as f64, bound, || "diameter bound".into());
            b.samples(1);
        }
        Ok(b.finish())
    }

    /// Universal-cover diameter certificate `(2 Deg_max / E) sqrt(max φ / min φ)`.
    /// Returns the certificate when the hypotheses hold.
    pub fn cover_certificate(&self) -> Result<(Option<f64>, CheckReport)> {
        let mut b = self.builder("cover");
        self.cd_gate(&mut b)?;
        let (e, positive) = spectral_positivity(self.g, self.rho)?;
        b.detail_f64("E", e);
        if !b.hypothesis("spectral_positivity", positive) || !b.hypotheses_ok() {
            return Ok((None, b.finish()));
        }
        let gs = ground_state(self.g, self.rho)?;
        let max = gs.phi.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = gs.phi.iter().copied().fold(f64::INFINITY, f64::min);
        let bound = 2.0 * self.g.max_degree() / gs.e * (max / min).sqrt();
        b.detail_f64("cover_diameter_bound", bound);
        b.detail_f64("phi_ratio", max / min);
        b.detail("base_diameter", self.g.diameter());
        // The base graph is a quotient of its universal cover.
        b.tracker().observe(self.g.diameter() as f64, bound, || {
            "base diameter <= cover bound".into()
        });
        b.samples(1);
        Ok((Some(bound), b.finish()))
    }

    /// `‖f - P_t f‖₁ ≤ 2 e^{KT} √t ‖√Γf‖₁` with `m`-weighted `ℓ¹` norms.
    pub fn l1_smoothing(&self) -> Result<CheckReport> {
        let mut b = self.builder("l1");
        self.with_grid(&mut b);
        let cd = self.cd_gate(&mut b)?;
        let kato = self.kato_gate(&mut b, KatoVariant::B, true)?;
        if !(cd && kato) {
            return Ok(b.finish());
        }
        let m = self.g.measure();
        let heat = self.heat()?;
        let c = 2.0 * (self.cfg.k * self.cfg.t).exp();
        b.detail_f64("c", c);
        let fs = self.random_functions();
        for (s, f) in fs.iter().enumerate() {
            let grad_l1: f64 = gamma_closed(self.g, f, f)
                .iter()
                .zip(m)
                .map(|(gv, mv)| mv * gv.max(0.0).sqrt())
                .sum();
            for &t in &self.cfg.t_grid {
                let pf = heat.apply(t, f);
                let lhs: f64 = (0..f.len()).map(|x| m[x] * (f[x] - pf[x]).abs()).sum();
                b.tracker()
                    .observe(lhs, c * t.sqrt() * grad_l1, || format!("sample {s}, t={t}"));
            }
        }
        b.samples(fs.len());
        Ok(b.finish())
    }

    /// Reports `λ₁`, `h` and `λ₁ / h²`; the only asserted inequality is the
    /// classical lower bound `λ₁ ≥ h² / (2 Deg_max)`.
    pub fn buser(&self) -> Result<CheckReport> {
        let mut b = self.builder("buser");
        let small = b.hypothesis("exact_cheeger_size", self.g.len() <= CHEEGER_MAX_VERTICES);
        let cd = self.cd_gate(&mut b)?;
        let kato = self.kato_gate(&mut b, KatoVariant::B, true)?;
        if !(small && cd && kato) {
            return Ok(b.finish());
        }
        let l1 = lambda1(self.g)?;
        let h = cheeger_constant(self.g)?;
        b.detail_f64("lambda1", l1);
        b.detail_f64("cheeger", h);
        b.detail_f64("ratio", l1 / (h * h));
        let floor = h * h / (2.0 * self.g.max_degree());
        b.detail_f64("cheeger_floor", floor);
        b.tracker().observe(floor, l1, || "lambda1 >= h^2 / (2 Deg_max)".into());
        b.samples(1);
        Ok(b.finish())
    }

    pub fn run(&self, check: Suite) -> Result<Vec<CheckReport>> {
        check
            .checks()
            .into_iter()
            .map(|c| match c {
                Suite::Lichnerowicz => self.lichnerowicz(),
                Suite::Gradient => self.gradient_estimates(),
                Suite::Supnorm => self.gradient_supnorm(),
                Suite::Harnack => self.eigenfunction_harnack(),
                Suite::Semigroup => self.semigroup_bounds(),
                Suite::Diameter => self.diameter(),
                Suite::L1 => self.l1_smoothing(),
                Suite::Buser => self.buser(),
                Suite::Cover => self.cover_certificate().map(|(_, r)| r),
                Suite::All => unreachable!("expanded by checks()"),
            })
            .collect()
    }
}

pub fn verify_lichnerowicz(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.lichnerowicz()
}

pub fn verify_gradient_estimates(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.gradient_estimates()
}

pub fn verify_gradient_supnorm(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.gradient_supnorm()
}

pub fn verify_eigenfunction_harnack(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.eigenfunction_harnack()
}

pub fn verify_semigroup_bounds(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.semigroup_bounds()
}

pub fn verify_diameter(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.diameter()
}

pub fn cover_diameter_certificate(
    g: &MeasuredWeightedGraph,
    rho: &[f64],
    cfg: &VerifyConfig,
) -> Result<(Option<f64>, CheckReport)> {
    Verifier::new(g, rho, cfg)?.cover_certificate()
}

pub fn verify_l1_smoothing(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.l1_smoothing()
}

pub fn buser_report(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig) -> Result<CheckReport> {
    Verifier::new(g, rho, cfg)?.buser()
}

/// Runs a suite; reports come back in the fixed suite order.
pub fn run_suite(g: &MeasuredWeightedGraph, rho: &[f64], cfg: &VerifyConfig, suite: Suite) -> Result<Vec<CheckReport>> {
    Verifier::new(g, rho, cfg)?.run(suite)
}

//! Bakry-Émery curvature, Kato constants and spectral quantities on finite
//! measured weighted graphs, together with a harness that numerically checks
//! the curvature-based eigenvalue, gradient, diameter and smoothing bounds.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | [`MeasuredWeightedGraph`], metric, JSON I/O |
//! | [`operators`] | `Δ`, `Γ`, `Γ₂`, local quadratic forms |
//! | [`curvature`] | pointwise curvature by pencil bisection, sampled CD check |
//! | [`semigroup`] | `e^{-t(L+W)}`, sup-norms, Kato constants |
//! | [`spectral`] | `λ₁`, ground states of `L/2 + ρ`, Cheeger constant |
//! | [`theorems`] | verification checks producing [`CheckReport`]s |
//! | [`cli`] | the `graphcurv` command-line driver |

pub mod cli;
pub mod curvature;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod operators;
pub mod quadrature;
pub mod report;
pub mod semigroup;
pub mod spectral;
pub mod theorems;

pub use curvature::{cd_verify_sampled, curvature_function, vertex_curvature, CurvatureProfile, Dimension};
pub use error::{Error, Result};
pub use graph::{paper_example, MeasuredWeightedGraph, VertexId};
pub use report::CheckReport;
pub use semigroup::{kato_condition_check, kato_constant, KatoResult, KatoVariant};
pub use spectral::{cheeger_constant, ground_state, lambda1, GroundState};
pub use theorems::{run_suite, Suite, VerifyConfig};

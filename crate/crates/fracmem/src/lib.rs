//! Numerical toolkit for eigenvalue optimization in the nonlocal composite
//! membrane problem.
//!
//! Given a bounded domain `Ω ⊂ ℝⁿ` (n = 1 or 2), an exponent `s ∈ (0,1)`, a
//! coupling `α > 0` and a quota `0 ≤ A ≤ |Ω|`, the library searches for a
//! subset `D ⊂ Ω` with `|D| = A` minimizing the first Dirichlet eigenvalue of
//! the operator `(-Δ)^s + α·χ_D`, where `(-Δ)^s` is the integral fractional
//! Laplacian with exterior-zero condition. Around this core it provides:
//!
//! - [`grid`] — uniform grids, domain masks (interval, rectangle, disk,
//!   annulus, angular sector) and measures;
//! - [`fracop`] — assembly and fast application of the discretized fractional
//!   Laplacian, Gagliardo quadratic form, Rayleigh quotients;
//! - [`eigen`] — smallest eigenpair of the operator plus a nonnegative
//!   potential, and subspace-restricted Rayleigh minimization;
//! - [`optimize`] — bathtub rearrangement, the alternating fixed-point scheme
//!   for `Λ_Ω(α, A)`, the crossing value `ᾱ_Ω(A)`, radial-restricted
//!   optimization, and the dictionary between the physical density problem
//!   and the eigenvalue problem;
//! - [`symmetry`] — Steiner symmetrization, asymmetry diagnostics, and the
//!   annulus symmetry-breaking experiment (σ, τ, λ₁(E₊), the angular-coupling
//!   operator `B[h]`, energy splitting);
//! - [`cli`] — JSON-configured experiment runner emitting JSON/CSV/SVG
//!   artifacts (used by the `fracmem` binary).
//!
//! # Runnable examples
//!
//! Each major capability has a standalone example under `examples/`:
//!
//! ```text
//! cargo run --release --example torsion_validation     # operator vs closed form
//! cargo run --release --example interval_optimal_config
//! cargo run --release --example monotonicity_scan
//! cargo run --release --example alpha_crossing
//! cargo run --release --example physical_dictionary
//! cargo run --release --example steiner_energy
//! cargo run --release --example ball_symmetry
//! cargo run --release --example annulus_symmetry_breaking
//! cargo run --release --example decay_exponents
//! ```

pub mod cli;
pub mod eigen;
pub mod fracop;
pub mod grid;
pub mod optimize;
mod quad;
pub mod symmetry;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid fractional exponent s={0}; require 0 < s < 1")]
    InvalidExponent(f64),

    #[error("empty domain mask: {shape} at resolution {resolution}")]
    EmptyDomain { shape: String, resolution: usize },

    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),

    #[error("field length {got} does not match grid cell count {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("field vanishes on the domain")]
    ZeroField,

    #[error("field contains a non-finite value")]
    NonFiniteField,

    #[error("target measure {area} outside [0, {measure}]")]
    QuotaOutOfRange { area: f64, measure: f64 },

    #[error("eigensolver did not converge after {iterations} iterations (best residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("rank-deficient subspace basis")]
    RankDeficientBasis,

    #[error("bisection bracket failure: {0}")]
    BracketFailure(String),

    #[error("domain is not line-convex along axis {axis} at line {line}")]
    NotLineConvex { axis: usize, line: usize },

    #[error("no radial bins contain cells")]
    EmptyBins,

    #[error("domain is not rotationally symmetric: {0}")]
    NotRadial(String),

    #[error("degenerate density class: ceiling equals floor")]
    DegenerateDensity,

    #[error("mass {mass} outside admissible band [{lo}, {hi}]")]
    MassOutOfBand { mass: f64, lo: f64, hi: f64 },

    #[error("quadrature did not converge: estimate {estimate:.6e}, error bound {error:.3e}")]
    QuadratureNonConvergence { estimate: f64, error: f64 },

    #[error("invalid configuration field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to: 2 for validation
    /// problems, 3 for solver failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidExponent(_)
            | Error::EmptyDomain { .. }
            | Error::InvalidShape(_)
            | Error::ShapeMismatch { .. }
            | Error::QuotaOutOfRange { .. }
            | Error::NotLineConvex { .. }
            | Error::NotRadial(_)
            | Error::DegenerateDensity
            | Error::MassOutOfBand { .. }
            | Error::Config { .. }
            | Error::Json(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

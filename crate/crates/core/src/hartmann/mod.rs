//! The deformed ring-shaped potential
//! `V = −2Z/r + q δ² σ² / (r² sin²θ)`, `Z = δσ²`, in units with `ħ²/2m = 1`.
//!
//! Separated in parabolic coordinates `(ξ, η, φ)`, `r = (ξ² + η²)/2`, and in
//! spherical coordinates. Both give `E = −Z²/n̄²` in units of `eps0`; the
//! effective principal numbers are `n + n' + 1 + β` and `n_r + ℓ' + 1`.

mod normalization;
mod nu_instances;
mod params;
mod states;
mod table;
mod wavefunction;

pub use normalization::{normalization_angular, normalization_parabolic, normalization_radial, Normalization};
pub use nu_instances::{
    angular_closed_form, angular_kappa_via_nu, angular_problem, parabolic_closed_form, parabolic_energy_via_nu,
    parabolic_problem, radial_closed_form, radial_problem, radial_sqrt_e_via_nu, spherical_energy_via_nu, ClosedForm,
};
pub use params::{potential, PotentialParams, EPS0_EV};
pub use states::{
    energy_parabolic, energy_spherical, parabolic_shell, spherical_shell, BetaMode, EigenResult, ParabolicState,
    Provenance, QuantumNumbers, SphericalState,
};
pub use table::{table1, Table1Block, Table1Row};
pub use wavefunction::{wavefunction_parabolic, wavefunction_spherical, ParabolicWavefunction, SphericalWavefunction};

use crate::nu_engine::NuError;
use crate::orthopoly::OrthoPolyError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HartmannError {
    #[error("{0}")]
    InvalidParameter(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid coordinate: {0}")]
    InvalidCoordinate(String),
    #[error("potential is singular at r = {r}")]
    OriginSingularity { r: f64 },
    #[error("ring term is singular on the axis (theta = {theta})")]
    AxisSingularity { theta: f64 },
    #[error("beta complex in exact mode: upsilon = {upsilon} < 1/2")]
    ComplexBeta { upsilon: f64 },
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    OrthoPoly(#[from] OrthoPolyError),
}

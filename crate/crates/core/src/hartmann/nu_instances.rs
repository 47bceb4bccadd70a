//! The three separated equations as `(σ, τ̃, σ̃)` triples, the closed forms
//! the reduction should reproduce, and spectra obtained by quantizing the
//! reduction itself.

use super::{HartmannError, ParabolicState, PotentialParams, SphericalState};
use crate::nu_engine::{solve_quantization, NuError, NuProblem};
use crate::orthopoly::Polynomial;

/// `u'' + u'/(2s) + (−ε²s² − α₁²s − β²)/(4s²) u = 0`, `s = ξ²`.
pub fn parabolic_problem(eps: f64, alpha1_sq: f64, beta_sq: f64) -> Result<NuProblem, NuError> {
    NuProblem::new(
        Polynomial::linear(0.0, 2.0),
        Polynomial::constant(1.0),
        Polynomial::quadratic(-beta_sq, -alpha1_sq, -eps * eps),
    )
}

/// `Θ'' − 2x/(1−x²) Θ' + (κ(1−x²) − m'²)/(1−x²)² Θ = 0`, `x = cos θ`.
pub fn angular_problem(kappa: f64, m_prime: f64) -> Result<NuProblem, NuError> {
    NuProblem::new(
        Polynomial::quadratic(1.0, 0.0, -1.0),
        Polynomial::linear(0.0, -2.0),
        Polynomial::quadratic(kappa - m_prime * m_prime, 0.0, -kappa),
    )
}

/// `U'' + (−E'r² − a'r − κ)/r² U = 0`; the Coulomb case has `a' = −2Z`.
pub fn radial_problem(e_prime: f64, a_prime: f64, kappa: f64) -> Result<NuProblem, NuError> {
    NuProblem::new(
        Polynomial::linear(0.0, 1.0),
        Polynomial::zero(),
        Polynomial::quadratic(-kappa, -a_prime, -e_prime),
    )
}

/// Reference values a reduction is expected to produce.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    /// Both admissible-square `k`, ascending.
    pub k: [f64; 2],
    pub k_selected: f64,
    pub tau: Polynomial,
    /// `k + π'` of the selected branch.
    pub lambda: f64,
    pub lambda_n: f64,
}

/// Parabolic instance written with `Υ² = β² + 1/4`:
/// `k = −α₁²/2 ± εΥ`, `τ = 2(1+Υ) − 2εs`, `λ = −α₁²/2 − ε − Υε`, `λ_n = 2nε`.
pub fn parabolic_closed_form(eps: f64, alpha1_sq: f64, upsilon: f64, n: usize) -> ClosedForm {
    let base = -0.5 * alpha1_sq;
    ClosedForm {
        k: [base - eps * upsilon, base + eps * upsilon],
        k_selected: base - eps * upsilon,
        tau: Polynomial::linear(2.0 * (1.0 + upsilon), -2.0 * eps),
        lambda: base - eps - upsilon * eps,
        lambda_n: 2.0 * n as f64 * eps,
    }
}

/// `k ∈ {κ − m'², κ}`, `τ = −2(m'+1)x`, `λ = κ − m'(m'+1)`,
/// `λ_n = 2n(m'+1) + n(n−1)`.
pub fn angular_closed_form(kappa: f64, m_prime: f64, n: usize) -> ClosedForm {
    let nf = n as f64;
    ClosedForm {
        k: [kappa - m_prime * m_prime, kappa],
        k_selected: kappa - m_prime * m_prime,
        tau: Polynomial::linear(0.0, -2.0 * (m_prime + 1.0)),
        lambda: kappa - m_prime * (m_prime + 1.0),
        lambda_n: 2.0 * nf * (m_prime + 1.0) + nf * (nf - 1.0),
    }
}

/// `k = −a' ± √(E'(1+4κ))`, `τ = 1 + √(1+4κ) − 2√E' r`,
/// `λ = −a' − √(E'(1+4κ)) − √E'`, `λ_n = 2n√E'`.
pub fn radial_closed_form(e_prime: f64, a_prime: f64, kappa: f64, n: usize) -> ClosedForm {
    let root = (e_prime * (1.0 + 4.0 * kappa)).sqrt();
    let sqrt_e = e_prime.sqrt();
    ClosedForm {
        k: [-a_prime - root, -a_prime + root],
        k_selected: -a_prime - root,
        tau: Polynomial::linear(1.0 + (1.0 + 4.0 * kappa).sqrt(), -2.0 * sqrt_e),
        lambda: -a_prime - root - sqrt_e,
        lambda_n: 2.0 * n as f64 * sqrt_e,
    }
}

/// Separation constant `κ` at which the angular problem has a polynomial
/// solution with `n_theta` nodes.
pub fn angular_kappa_via_nu(m_prime: f64, n_theta: usize) -> Result<f64, HartmannError> {
    let top = n_theta as f64 + m_prime + 2.0;
    Ok(solve_quantization(n_theta, (-0.5, 2.0 * top * top), |kappa| {
        angular_problem(kappa, m_prime)
    })?)
}

/// `√E'` at which the radial problem with charge `z` and constant `κ` is
/// quantized at level `n_r`.
pub fn radial_sqrt_e_via_nu(z: f64, kappa: f64, n_r: usize) -> Result<f64, HartmannError> {
    Ok(solve_quantization(n_r, (1e-3 * z, 2.0 * z + 1.0), |x| {
        radial_problem(x * x, -2.0 * z, kappa)
    })?)
}

/// Spherical energy in internal units, found by quantizing the angular and
/// then the radial reduction.
pub fn spherical_energy_via_nu(params: &PotentialParams, state: &SphericalState) -> Result<f64, HartmannError> {
    let kappa = angular_kappa_via_nu(state.m_prime(params), state.n_theta)?;
    let x = radial_sqrt_e_via_nu(params.z_eff(), kappa, state.n_r)?;
    Ok(-x * x)
}

/// Separation constant `β_j` of one parabolic equation at decay rate `eps`.
fn parabolic_separation_via_nu(eps: f64, upsilon: f64, n: usize) -> Result<f64, HartmannError> {
    let beta_sq = upsilon * upsilon - 0.25;
    let hi = 4.0 * eps * (2.0 * n as f64 + 2.0 + upsilon) + 1.0;
    Ok(solve_quantization(n, (-1.0, hi), |b| parabolic_problem(eps, -b, beta_sq))?)
}

/// Parabolic energy in internal units: the decay rate `ε` is adjusted until
/// the two separation constants add up to `4Z`.
pub fn parabolic_energy_via_nu(params: &PotentialParams, state: &ParabolicState) -> Result<f64, HartmannError> {
    let upsilon = state.upsilon(params);
    let z = params.z_eff();
    let excess = |eps: f64| -> Result<f64, HartmannError> {
        Ok(parabolic_separation_via_nu(eps, upsilon, state.n)?
            + parabolic_separation_via_nu(eps, upsilon, state.n_prime)?
            - 4.0 * z)
    };
    let (mut lo, mut hi) = (1e-3 * z, 2.0 * z + 1.0);
    if excess(lo)? > 0.0 || excess(hi)? < 0.0 {
        return Err(NuError::NotBracketed { lo, hi }.into());
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if excess(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let eps = 0.5 * (lo + hi);
    Ok(-eps * eps)
}

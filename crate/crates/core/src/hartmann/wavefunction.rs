use num_complex::Complex64;

use super::normalization::{angular_degree, normalization_angular, normalization_parabolic, normalization_radial};
use super::{BetaMode, HartmannError, ParabolicState, PotentialParams, SphericalState};
use crate::orthopoly::{jacobi_unchecked, laguerre_unchecked};

fn check_positive(name: &str, v: f64) -> Result<(), HartmannError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(HartmannError::InvalidCoordinate(format!("{name} must be positive (got {v})")))
    }
}

/// `Ψ(ξ, η, φ) = C (ξη)^{−½} u_n(ξ) u_{n'}(η) e^{im'φ}` with
/// `u_n(ξ) = ξ^{β+½} e^{−εξ²/2} L_n^β(εξ²)` and `ε = Z/n̄`.
///
/// Only [`BetaMode::Principal`] solves the separated equations; the exact
/// mode is kept for comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolicWavefunction {
    pub state: ParabolicState,
    pub mode: BetaMode,
    pub beta: f64,
    /// `√(−E)` in internal units.
    pub epsilon: f64,
    pub norm: f64,
}

impl ParabolicWavefunction {
    pub fn new(params: &PotentialParams, state: &ParabolicState, mode: BetaMode) -> Result<Self, HartmannError> {
        let beta = state.beta(params, mode)?;
        let epsilon = params.z_eff() / state.n_bar(params, mode)?;
        let norm = normalization_parabolic(params, state, mode)?.numeric;
        Ok(Self {
            state: *state,
            mode,
            beta,
            epsilon,
            norm,
        })
    }

    pub fn energy_internal(&self) -> f64 {
        -self.epsilon * self.epsilon
    }

    /// Unnormalized factor `u_n(ξ)`.
    pub fn factor(&self, n: usize, xi: f64) -> f64 {
        let s = xi * xi;
        xi.powf(self.beta + 0.5) * (-0.5 * self.epsilon * s).exp() * laguerre_unchecked(n, self.beta, self.epsilon * s)
    }

    pub fn u(&self, xi: f64) -> f64 {
        self.factor(self.state.n, xi)
    }

    pub fn v(&self, eta: f64) -> f64 {
        self.factor(self.state.n_prime, eta)
    }

    /// Separation constants `(β₁, β₂)` of the `ξ` and `η` equations,
    /// `β_j = 2ε(2n_j + 1 + β)`; they sum to `4Z` in principal mode.
    pub fn separation_constants(&self) -> (f64, f64) {
        let c = |n: usize| 2.0 * self.epsilon * (2.0 * n as f64 + 1.0 + self.beta);
        (c(self.state.n), c(self.state.n_prime))
    }

    pub fn eval(&self, xi: f64, eta: f64, phi: f64) -> Result<Complex64, HartmannError> {
        check_positive("xi", xi)?;
        check_positive("eta", eta)?;
        let amp = self.norm * self.u(xi) * self.v(eta) / (xi * eta).sqrt();
        Ok(Complex64::from_polar(amp, self.state.m_prime * phi))
    }
}

pub fn wavefunction_parabolic(
    params: &PotentialParams,
    state: &ParabolicState,
    mode: BetaMode,
    xi: f64,
    eta: f64,
    phi: f64,
) -> Result<Complex64, HartmannError> {
    ParabolicWavefunction::new(params, state, mode)?.eval(xi, eta, phi)
}

/// `Ψ(r, θ, φ) = (2π)^{−½} U(r)/r Θ(cos θ) e^{imφ}` with
/// `U = C r^{ℓ'+1} e^{−√E' r} L_{n_r}^{2ℓ'+1}(2√E' r)` and
/// `Θ = C' (1 − x²)^{m'/2} P_{n_θ}^{(m',m')}(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalWavefunction {
    pub state: SphericalState,
    pub m_prime: f64,
    pub ell_prime: f64,
    pub k_bar: f64,
    /// `√E' = Z/n̄`
    pub sqrt_e: f64,
    pub radial_norm: f64,
    pub angular_norm: f64,
}

impl SphericalWavefunction {
    pub fn new(params: &PotentialParams, state: &SphericalState) -> Result<Self, HartmannError> {
        params.validate()?;
        let m_prime = state.m_prime(params);
        let ell_prime = state.ell_prime(params);
        let k_bar = state.k_bar(params);
        let sqrt_e = params.z_eff() / state.n_bar(params);
        angular_degree(ell_prime, m_prime)?;
        Ok(Self {
            state: *state,
            m_prime,
            ell_prime,
            k_bar,
            sqrt_e,
            radial_norm: normalization_radial(state.n_r, k_bar, 0.5 / sqrt_e)?.numeric,
            angular_norm: normalization_angular(ell_prime, m_prime)?.numeric,
        })
    }

    pub fn energy_internal(&self) -> f64 {
        -self.sqrt_e * self.sqrt_e
    }

    pub fn kappa(&self) -> f64 {
        self.ell_prime * (self.ell_prime + 1.0)
    }

    /// Normalized `U(r)`, `∫_0^∞ U² dr = 1`.
    pub fn radial(&self, r: f64) -> f64 {
        self.radial_norm
            * r.powf(self.ell_prime + 1.0)
            * (-self.sqrt_e * r).exp()
            * laguerre_unchecked(self.state.n_r, self.k_bar, 2.0 * self.sqrt_e * r)
    }

    /// Normalized `Θ` as a function of `x = cos θ`, `∫_{−1}^{1} Θ² dx = 1`.
    pub fn angular(&self, x: f64) -> f64 {
        let x = x.clamp(-1.0, 1.0);
        self.angular_norm
            * (1.0 - x * x).powf(0.5 * self.m_prime)
            * jacobi_unchecked(self.state.n_theta, self.m_prime, self.m_prime, x)
    }

    /// Normalized `Θ` as a function of `θ`. Uses `sin θ` directly, which
    /// avoids the cancellation in `1 − cos²θ` near the poles.
    pub fn angular_theta(&self, theta: f64) -> f64 {
        self.angular_norm
            * theta.sin().abs().powf(self.m_prime)
            * jacobi_unchecked(self.state.n_theta, self.m_prime, self.m_prime, theta.cos())
    }

    pub fn eval(&self, r: f64, theta: f64, phi: f64) -> Result<Complex64, HartmannError> {
        check_positive("r", r)?;
        let amp = self.radial(r) / r * self.angular_theta(theta) / (2.0 * std::f64::consts::PI).sqrt();
        Ok(Complex64::from_polar(amp, self.state.m as f64 * phi))
    }
}

pub fn wavefunction_spherical(
    params: &PotentialParams,
    state: &SphericalState,
    r: f64,
    theta: f64,
    phi: f64,
) -> Result<Complex64, HartmannError> {
    SphericalWavefunction::new(params, state)?.eval(r, theta, phi)
}

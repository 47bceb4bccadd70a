//! Normalization constants: the printed closed forms next to the values
//! that actually enforce unit norm, obtained by Gauss quadrature.

use statrs::function::gamma::ln_gamma;

use super::{BetaMode, HartmannError, ParabolicState, PotentialParams};
use crate::orthopoly::{gauss_rule, jacobi_unchecked, laguerre_unchecked, real_factorial, QuadratureKind};

/// Nodes beyond the polynomial degree; the rules are exact well before.
const EXTRA_NODES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalization {
    pub closed_form: f64,
    /// Constant giving unit norm; authoritative.
    pub numeric: f64,
}

impl Normalization {
    pub fn ratio(&self) -> f64 {
        self.closed_form / self.numeric
    }
}

/// `∫ t^alpha e^{−t} [L_n^beta(t)]² dt` by an `alpha`-weighted Gauss–Laguerre rule.
fn laguerre_moment(n: usize, beta: f64, alpha: f64) -> Result<f64, HartmannError> {
    let rule = gauss_rule(QuadratureKind::GaussLaguerre { alpha }, n + EXTRA_NODES)?;
    Ok(rule.integrate(|t| laguerre_unchecked(n, beta, t).powi(2)))
}

/// `∫_0^∞ ξ^{2p} u(ξ)² dξ` for `u = ξ^{β+½} e^{−εξ²/2} L_n^β(εξ²)`, `p ∈ {0, 1}`.
pub(crate) fn parabolic_moment(n: usize, beta: f64, eps: f64, p: i32) -> Result<f64, HartmannError> {
    // t = εξ² turns the integral into a Laguerre moment of weight t^{β+p}
    let moment = laguerre_moment(n, beta, beta + p as f64)?;
    Ok(0.5 * eps.powf(-beta - 1.0 - p as f64) * moment)
}

/// Eq-34 style closed form for the parabolic constant.
fn parabolic_closed_form(n: usize, n_prime: usize, beta: f64) -> f64 {
    let ln = (4.0f64).ln() + ln_gamma(n as f64 + 1.0) + ln_gamma(n_prime as f64 + 1.0)
        - ln_gamma(n as f64 + beta + 1.0)
        - ln_gamma(n_prime as f64 + beta + 1.0);
    (0.5 * ln).exp()
}

/// Constant `C` in `Ψ = C (ξη)^{−½} u(ξ) v(η) e^{im'φ}`.
///
/// The numeric value integrates `|Ψ|²` against `(ξ² + η²) ξη dξ dη dφ`.
pub fn normalization_parabolic(
    params: &PotentialParams,
    state: &ParabolicState,
    mode: BetaMode,
) -> Result<Normalization, HartmannError> {
    params.validate()?;
    let beta = state.beta(params, mode)?;
    let eps = params.z_eff() / state.n_bar(params, mode)?;
    let u0 = parabolic_moment(state.n, beta, eps, 0)?;
    let u2 = parabolic_moment(state.n, beta, eps, 1)?;
    let v0 = parabolic_moment(state.n_prime, beta, eps, 0)?;
    let v2 = parabolic_moment(state.n_prime, beta, eps, 1)?;
    let norm = 2.0 * std::f64::consts::PI * (u2 * v0 + u0 * v2);
    Ok(Normalization {
        closed_form: parabolic_closed_form(state.n, state.n_prime, beta),
        numeric: norm.sqrt().recip(),
    })
}

/// Constant `C` in `Θ = C (1 − x²)^{m'/2} P_n^{(m',m')}(x)`, `n = ℓ' − m'`.
pub fn normalization_angular(ell_prime: f64, m_prime: f64) -> Result<Normalization, HartmannError> {
    let n = angular_degree(ell_prime, m_prime)?;
    let rule = gauss_rule(QuadratureKind::GaussJacobi { alpha: m_prime, beta: m_prime }, n + EXTRA_NODES)?;
    let integral = rule.integrate(|x| jacobi_unchecked(n, m_prime, m_prime, x).powi(2));
    let closed_form = 1.0 / (2f64.powf(m_prime) * (ell_prime + 1.0))
        * ((2.0 * ell_prime + 1.0) / 2.0 * real_factorial(ell_prime - m_prime) * real_factorial(ell_prime + m_prime))
            .sqrt();
    Ok(Normalization {
        closed_form,
        numeric: integral.sqrt().recip(),
    })
}

pub(crate) fn angular_degree(ell_prime: f64, m_prime: f64) -> Result<usize, HartmannError> {
    let n = ell_prime - m_prime;
    if !(m_prime.is_finite() && m_prime >= 0.0) || !(n > -1e-9) || (n - n.round()).abs() > 1e-9 {
        return Err(HartmannError::InvalidState(format!(
            "l' - m' must be a non-negative integer (l' = {ell_prime}, m' = {m_prime})"
        )));
    }
    Ok(n.round() as usize)
}

/// Constant `C` in `U = C r^{(k̄+1)/2} e^{−r/2L} L_n^{k̄}(r/L)`.
///
/// `lengthscale` is `L = 1/(2√E')`, so `r/L = 2√E' r`.
pub fn normalization_radial(n_r: usize, k_bar: f64, lengthscale: f64) -> Result<Normalization, HartmannError> {
    if !(k_bar.is_finite() && k_bar > 0.0) {
        return Err(HartmannError::InvalidState(format!("k_bar must be positive (got {k_bar})")));
    }
    if !(lengthscale.is_finite() && lengthscale > 0.0) {
        return Err(HartmannError::InvalidState(format!(
            "lengthscale must be positive (got {lengthscale})"
        )));
    }
    let moment = laguerre_moment(n_r, k_bar, k_bar + 1.0)?;
    let norm = lengthscale.powf(k_bar + 2.0) * moment;
    let n = n_r as f64;
    let closed_form = (real_factorial(n) / (2.0 * (n + k_bar) * real_factorial(n + k_bar))).sqrt();
    Ok(Normalization {
        closed_form,
        numeric: norm.sqrt().recip(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::laguerre_norm_sq;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn angular_examples() {
        assert_relative_eq!(normalization_angular(0.0, 0.0).unwrap().numeric, 0.5f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(normalization_angular(1.0, 0.0).unwrap().numeric, 1.5f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(normalization_angular(1.0, 1.0).unwrap().numeric, 3f64.sqrt() / 2.0, epsilon = 1e-14);
        assert!(normalization_angular(1.5, 1.0).is_err());
        assert!(normalization_angular(0.0, 1.0).is_err());
    }

    #[test]
    fn angular_closed_form_agrees_at_origin_only() {
        let c = normalization_angular(0.0, 0.0).unwrap();
        assert_relative_eq!(c.ratio(), 1.0, epsilon = 1e-14);
        let c = normalization_angular(2.0, 1.0).unwrap();
        assert!((c.ratio() - 1.0).abs() > 1e-3);
    }

    #[test]
    fn radial_examples() {
        // hydrogen 1s: U = 2 r e^{-r}, k̄ = 1, L = 1/2
        let c = normalization_radial(0, 1.0, 0.5).unwrap();
        assert_relative_eq!(c.numeric, 2.0, epsilon = 1e-13);
        // closed integral for the radial norm, used as an independent oracle
        for (n, k_bar, l) in [(1usize, 1.0, 1.0f64), (3, 3.0, 2.0), (2, 1.0 + 2.0 * 1.5f64.sqrt(), 0.7)] {
            let nf = n as f64;
            let want = l.powf(k_bar + 2.0) * laguerre_norm_sq(n, k_bar).unwrap() * (2.0 * nf + k_bar + 1.0);
            let got = normalization_radial(n, k_bar, l).unwrap().numeric;
            assert_relative_eq!(got, want.sqrt().recip(), max_relative = 1e-12);
        }
        assert!(normalization_radial(0, 0.0, 1.0).is_err());
        assert!(normalization_radial(0, 1.0, -1.0).is_err());
    }

    #[test]
    fn parabolic_examples() {
        let h = PotentialParams::hydrogen();
        let ground = ParabolicState::new(0, 0, 0.0).unwrap();
        let c = normalization_parabolic(&h, &ground, BetaMode::Principal).unwrap();
        assert_relative_eq!(c.closed_form, 2.0, epsilon = 1e-14);
        assert_relative_eq!(c.numeric, PI.sqrt().recip(), epsilon = 1e-13);
        let c = normalization_parabolic(&h, &ParabolicState::new(1, 0, 1.0).unwrap(), BetaMode::Principal).unwrap();
        assert!(c.ratio().is_finite() && c.ratio() > 0.0);
    }
}

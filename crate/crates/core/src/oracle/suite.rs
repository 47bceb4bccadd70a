//! Residuals of assembled eigenfunctions on standard grids.

use super::{default_radial_box, residual, Grid1D, OracleError, SeparatedOde};
use crate::hartmann::{ParabolicWavefunction, SphericalWavefunction};

/// Points used by the `*_residual` helpers unless told otherwise.
pub const RESIDUAL_POINTS: usize = 40_000;
/// Angular grids stop this far from the poles.
const POLE_GAP: f64 = 0.01;
/// Pole gap when `m'` is not an integer and `sin^{m'}θ` is not smooth there.
const ROUGH_POLE_GAP: f64 = 0.1;
/// With non-integer `ℓ'` radial grids start at this fraction of `n̄/Z`.
const ROUGH_RADIAL_START: f64 = 0.25;

fn is_integer(x: f64) -> bool {
    (x - x.round()).abs() < 1e-12
}
/// Parabolic grids start here; `u ~ ξ^{Υ+½}` is not smooth at the origin.
const PARABOLIC_LO: f64 = 0.5;

/// `U'' + (E − κ/r² + 2Z/r) U` for the radial factor, with the energy
/// multiplied by `energy_factor` (1 for the analytic value).
pub fn radial_residual(
    wf: &SphericalWavefunction,
    z_eff: f64,
    energy_factor: f64,
    n_points: usize,
) -> Result<f64, OracleError> {
    let n_bar = z_eff / wf.sqrt_e;
    let hi = default_radial_box(n_bar, z_eff);
    // U ~ r^{ℓ'+1}: central differences lose accuracy at the origin unless
    // the power is an integer
    let grid = if is_integer(wf.ell_prime) {
        Grid1D::radial(hi, n_points)?
    } else {
        Grid1D::new(ROUGH_RADIAL_START * n_bar / z_eff, hi, n_points)?
    };
    let ode = SeparatedOde::RadialU {
        z_eff,
        kappa: wf.kappa(),
        energy: energy_factor * wf.energy_internal(),
    };
    Ok(residual(&ode, |r| wf.radial(r), &grid))
}

/// Angular equation in `θ` with `κ` multiplied by `kappa_factor`.
pub fn angular_residual(wf: &SphericalWavefunction, kappa_factor: f64, n_points: usize) -> Result<f64, OracleError> {
    let gap = if is_integer(wf.m_prime) { POLE_GAP } else { ROUGH_POLE_GAP };
    let grid = Grid1D::new(gap, std::f64::consts::PI - gap, n_points)?;
    let ode = SeparatedOde::AngularTheta {
        kappa: kappa_factor * wf.kappa(),
        m_prime: wf.m_prime,
    };
    Ok(residual(&ode, |t| wf.angular_theta(t), &grid))
}

/// Residual of the `ξ` factor (`second = false`) or the `η` factor, with the
/// energy multiplied by `energy_factor`.
pub fn parabolic_residual(
    wf: &ParabolicWavefunction,
    second: bool,
    energy_factor: f64,
    n_points: usize,
) -> Result<f64, OracleError> {
    let (b1, b2) = wf.separation_constants();
    let (n, separation) = if second { (wf.state.n_prime, b2) } else { (wf.state.n, b1) };
    // the Gaussian e^{−εξ²/2} has fallen below e^{−40} at hi
    let hi = (80.0 / wf.epsilon).sqrt() + 2.0;
    let grid = Grid1D::new(PARABOLIC_LO, hi, n_points)?;
    let ode = SeparatedOde::ParabolicU {
        upsilon: wf.beta,
        energy: energy_factor * wf.energy_internal(),
        separation,
    };
    Ok(residual(&ode, |x| wf.factor(n, x), &grid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hartmann::{BetaMode, ParabolicState, PotentialParams, SphericalState};

    #[test]
    fn non_integer_indices() {
        for q in [0.01, 0.25, 0.5] {
            let p = PotentialParams::new(1.0, 1.0, q).unwrap();
            for s in [SphericalState::new(0, 0, 0), SphericalState::new(3, 0, 0), SphericalState::new(0, 3, 0)] {
                let wf = SphericalWavefunction::new(&p, &s).unwrap();
                assert!(radial_residual(&wf, 1.0, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5, "{q} {s:?}");
                assert!(angular_residual(&wf, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5, "{q} {s:?}");
            }
        }
    }

    #[test]
    fn low_states_have_small_residuals() {
        let h = PotentialParams::hydrogen();
        let wf = SphericalWavefunction::new(&h, &SphericalState::new(0, 0, 0)).unwrap();
        assert!(radial_residual(&wf, 1.0, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5);
        assert!(radial_residual(&wf, 1.0, 1.1, RESIDUAL_POINTS).unwrap() > 1e-2);
        let wf = SphericalWavefunction::new(&h, &SphericalState::new(0, 1, 0)).unwrap();
        assert!(angular_residual(&wf, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5);
        assert!(angular_residual(&wf, 1.1, RESIDUAL_POINTS).unwrap() > 1e-2);
        let s = ParabolicState::new(1, 0, 0.0).unwrap();
        let wf = ParabolicWavefunction::new(&h, &s, BetaMode::Principal).unwrap();
        assert!(parabolic_residual(&wf, false, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5);
        assert!(parabolic_residual(&wf, true, 1.0, RESIDUAL_POINTS).unwrap() < 1e-5);
        assert!(parabolic_residual(&wf, false, 1.1, RESIDUAL_POINTS).unwrap() > 1e-2);
    }
}

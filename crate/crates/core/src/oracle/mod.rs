//! Independent numerical checks: finite-difference eigensolvers for the
//! radial and angular equations, central-difference residuals and
//! quadrature Gram matrices. Nothing here evaluates a closed-form spectrum.

mod overlap;
mod residual;
mod suite;
mod tridiag;

pub use overlap::{overlap_matrix, Overlap, DRIFT_TOL};
pub use residual::{residual, SeparatedOde};
pub use suite::{angular_residual, parabolic_residual, radial_residual, RESIDUAL_POINTS};

use tridiag::SymTridiagonal;

use crate::orthopoly::OrthoPolyError;

/// Largest accepted two-grid Richardson estimate.
pub const CONVERGENCE_TOL: f64 = 1e-2;
/// Largest accepted `|u(hi)| / max|u|` for the highest requested state.
pub const BOUNDARY_TOL: f64 = 1e-6;
pub const MAX_COUNT: usize = 10;
pub const MIN_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("eigenvalue {index} unconverged: Richardson estimate {estimate:.3e} exceeds {tolerance:.1e}")]
    Unconverged { index: usize, estimate: f64, tolerance: f64 },
    #[error("box too small: state {index} has boundary amplitude {amplitude:.3e} of its maximum")]
    BoxTooSmall { index: usize, amplitude: f64 },
    #[error(transparent)]
    OrthoPoly(#[from] OrthoPolyError),
}

/// Uniform grid `lo, lo + h, …, hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
    pub spacing: f64,
}

impl Grid1D {
    pub fn new(lo: f64, hi: f64, n_points: usize) -> Result<Self, OracleError> {
        if n_points < MIN_POINTS {
            return Err(OracleError::InvalidGrid(format!(
                "need at least {MIN_POINTS} points, got {n_points}"
            )));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(OracleError::InvalidGrid(format!("need lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self {
            lo,
            hi,
            n_points,
            spacing: (hi - lo) / (n_points - 1) as f64,
        })
    }

    /// `r_j = j h`, `j = 1..=n`, `h = hi/n`; the Dirichlet ghost sits at the origin.
    pub fn radial(hi: f64, n_points: usize) -> Result<Self, OracleError> {
        let h = hi / n_points as f64;
        let mut g = Self::new(h, hi, n_points)?;
        g.spacing = h;
        Ok(g)
    }

    /// Cell centres `θ_j = (j + ½) h` on `(0, π)`, `h = π/n`.
    pub fn angular(n_points: usize) -> Result<Self, OracleError> {
        let h = std::f64::consts::PI / n_points as f64;
        let mut g = Self::new(0.5 * h, std::f64::consts::PI - 0.5 * h, n_points)?;
        g.spacing = h;
        Ok(g)
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.hi
        } else {
            self.lo + i as f64 * self.spacing
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.point(i))
    }

    fn origin_anchored(&self) -> bool {
        (self.lo - self.spacing).abs() <= 1e-12 * self.spacing
    }

    /// The same interval at half the spacing.
    pub fn refined(&self) -> Result<Self, OracleError> {
        if self.origin_anchored() {
            Self::radial(self.hi, 2 * self.n_points)
        } else {
            Self::new(self.lo, self.hi, 2 * self.n_points - 1)
        }
    }
}

/// Radial box `(26 + 4n̄) n̄/Z`: the slowest requested state has decayed
/// by `e^{−(26+4n̄)}`, enough to beat its `r^{n̄}` prefactor.
pub fn default_radial_box(n_bar: f64, z_eff: f64) -> f64 {
    (26.0 + 4.0 * n_bar) * n_bar / z_eff
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSpectrum {
    /// Eigenvalues on `grid`, ascending.
    pub eigenvalues: Vec<f64>,
    pub grid: Grid1D,
    /// `(4/3)|E_h − E_{h/2}|` per eigenvalue, relative to `max(|E|, floor)`.
    pub convergence_estimate: Vec<f64>,
    /// Eigenvalues on the refined grid.
    pub refined: Vec<f64>,
}

impl OracleSpectrum {
    /// Measured `(E_h − E_ref) / (E_{h/2} − E_ref)` against reference values.
    pub fn convergence_ratio(&self, reference: &[f64]) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(&self.refined)
            .zip(reference)
            .map(|((c, f), r)| (c - r) / (f - r))
            .collect()
    }

    /// Richardson-extrapolated eigenvalues `(4 E_{h/2} − E_h)/3`.
    pub fn extrapolated(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(&self.refined)
            .map(|(c, f)| (4.0 * f - c) / 3.0)
            .collect()
    }
}

fn check_count(count: usize) -> Result<(), OracleError> {
    if (1..=MAX_COUNT).contains(&count) {
        Ok(())
    } else {
        Err(OracleError::InvalidInput(format!("count must be in 1..={MAX_COUNT}, got {count}")))
    }
}

fn finish(
    grid: Grid1D,
    coarse: Vec<f64>,
    fine: Vec<f64>,
    floor: f64,
) -> Result<OracleSpectrum, OracleError> {
    let convergence_estimate: Vec<f64> = coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| 4.0 / 3.0 * (c - f).abs() / f.abs().max(floor))
        .collect();
    if let Some((index, &estimate)) = convergence_estimate
        .iter()
        .enumerate()
        .find(|(_, e)| !(**e <= CONVERGENCE_TOL))
    {
        return Err(OracleError::Unconverged {
            index,
            estimate,
            tolerance: CONVERGENCE_TOL,
        });
    }
    Ok(OracleSpectrum {
        eigenvalues: coarse,
        grid,
        convergence_estimate,
        refined: fine,
    })
}

/// `−u'' + (κ/r² − 2Z/r) u = E u` with Dirichlet ghosts at `lo − h` and `hi + h`.
fn radial_matrix(z_eff: f64, kappa: f64, grid: &Grid1D) -> SymTridiagonal {
    let h = grid.spacing;
    let inv_h2 = 1.0 / (h * h);
    let diag = grid
        .points()
        .map(|r| 2.0 * inv_h2 + kappa / (r * r) - 2.0 * z_eff / r)
        .collect();
    SymTridiagonal {
        diag,
        off: vec![-inv_h2; grid.n_points - 1],
    }
}

/// Lowest `count` eigenvalues of the radial equation in internal units.
///
/// Fails with [`OracleError::BoxTooSmall`] when the highest requested state
/// has not decayed at `hi`, and with [`OracleError::Unconverged`] when the
/// grid and its refinement disagree by more than [`CONVERGENCE_TOL`].
pub fn radial_eigen(z_eff: f64, kappa: f64, grid: &Grid1D, count: usize) -> Result<OracleSpectrum, OracleError> {
    check_count(count)?;
    if !(z_eff.is_finite() && z_eff > 0.0) {
        return Err(OracleError::InvalidInput(format!("Z must be positive, got {z_eff}")));
    }
    if !(kappa.is_finite() && kappa >= 0.0) {
        return Err(OracleError::InvalidInput(format!("kappa must be non-negative, got {kappa}")));
    }
    if !(grid.lo > 0.0) {
        return Err(OracleError::InvalidGrid(format!("radial grid must start above 0, got {}", grid.lo)));
    }
    if count > grid.n_points {
        return Err(OracleError::InvalidInput("more states than grid points".into()));
    }
    let a = radial_matrix(z_eff, kappa, grid);
    let coarse = a.lowest(count);

    let top = coarse[count - 1];
    let v = a.eigenvector(top);
    let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let amplitude = v[v.len() - 1].abs() / peak;
    if top >= 0.0 || !(amplitude <= BOUNDARY_TOL) {
        return Err(OracleError::BoxTooSmall {
            index: count - 1,
            amplitude,
        });
    }

    let fine_grid = grid.refined()?;
    let fine = radial_matrix(z_eff, kappa, &fine_grid).lowest(count);
    finish(*grid, coarse, fine, f64::MIN_POSITIVE)
}

/// `−(1/sinθ)(sinθ Θ')' + m'²/sin²θ Θ = κ Θ`, finite volumes on cell
/// centres. Face fluxes vanish at the poles, where `sin θ = 0`. The
/// generalized problem with mass `sin θ_j` is symmetrized by `√sin θ_j`.
fn angular_matrix(m_prime: f64, grid: &Grid1D) -> SymTridiagonal {
    let n = grid.n_points;
    let h = grid.spacing;
    let inv_h2 = 1.0 / (h * h);
    let centre: Vec<f64> = grid.points().map(f64::sin).collect();
    let face = |j: usize| (j as f64 * h).sin().max(0.0);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n - 1);
    for j in 0..n {
        let s = centre[j];
        let left = if j == 0 { 0.0 } else { face(j) };
        let right = if j + 1 == n { 0.0 } else { face(j + 1) };
        diag.push((left + right) * inv_h2 / s + m_prime * m_prime / (s * s));
        if j + 1 < n {
            off.push(-right * inv_h2 / (s * centre[j + 1]).sqrt());
        }
    }
    SymTridiagonal { diag, off }
}

/// Lowest `count` angular separation constants `κ` for azimuthal index `m'`.
///
/// The grid must be the cell-centre grid of [`Grid1D::angular`].
pub fn angular_eigen(m_prime: f64, grid: &Grid1D, count: usize) -> Result<OracleSpectrum, OracleError> {
    check_count(count)?;
    if !(m_prime.is_finite() && m_prime >= 0.0) {
        return Err(OracleError::InvalidInput(format!("m' must be non-negative, got {m_prime}")));
    }
    let expected = Grid1D::angular(grid.n_points)?;
    if (grid.lo - expected.lo).abs() > 1e-12 || (grid.hi - expected.hi).abs() > 1e-12 {
        return Err(OracleError::InvalidGrid(
            "angular grid must be the half-offset cell-centre grid on (0, pi)".into(),
        ));
    }
    let coarse = angular_matrix(m_prime, grid).lowest(count);
    let fine = angular_matrix(m_prime, &Grid1D::angular(2 * grid.n_points)?).lowest(count);
    finish(*grid, coarse, fine, 1.0)
}

#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;

use super::{HartmannError, PotentialParams};

/// Which separation constant enters the parabolic spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaMode {
    /// `β = √(Υ² − 1/4)`; needs `Υ ≥ 1/2`.
    Exact,
    /// `β = Υ`, the value that makes the two coordinate systems agree.
    #[default]
    Principal,
}

impl fmt::Display for BetaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::Principal => "principal",
        })
    }
}

impl FromStr for BetaMode {
    type Err = HartmannError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Self::Exact),
            "principal" => Ok(Self::Principal),
            other => Err(HartmannError::InvalidState(format!("unknown beta mode '{other}'"))),
        }
    }
}

/// Parabolic quantum numbers `(n, n', m')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolicState {
    pub n: usize,
    pub n_prime: usize,
    /// Bare magnetic index, `|m|` for physical states.
    pub m_prime: f64,
}

impl ParabolicState {
    pub fn new(n: usize, n_prime: usize, m_prime: f64) -> Result<Self, HartmannError> {
        if !(m_prime.is_finite() && m_prime >= 0.0) {
            return Err(HartmannError::InvalidState(format!("m' must be non-negative (got {m_prime})")));
        }
        Ok(Self { n, n_prime, m_prime })
    }

    /// `Υ = √(m'² + q δ² σ²)`
    pub fn upsilon(&self, params: &PotentialParams) -> f64 {
        (self.m_prime * self.m_prime + params.ring_strength()).sqrt()
    }

    pub fn beta(&self, params: &PotentialParams, mode: BetaMode) -> Result<f64, HartmannError> {
        let upsilon = self.upsilon(params);
        match mode {
            BetaMode::Principal => Ok(upsilon),
            BetaMode::Exact if upsilon >= 0.5 => Ok((upsilon * upsilon - 0.25).sqrt()),
            BetaMode::Exact => Err(HartmannError::ComplexBeta { upsilon }),
        }
    }

    pub fn n_bar(&self, params: &PotentialParams, mode: BetaMode) -> Result<f64, HartmannError> {
        Ok((self.n + self.n_prime) as f64 + 1.0 + self.beta(params, mode)?)
    }
}

/// Spherical quantum numbers `(n_r, n_θ, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphericalState {
    pub n_r: usize,
    /// Node count of the angular factor.
    pub n_theta: usize,
    pub m: i64,
}

impl SphericalState {
    pub fn new(n_r: usize, n_theta: usize, m: i64) -> Self {
        Self { n_r, n_theta, m }
    }

    /// `m' = √(m² + q δ² σ²)`
    pub fn m_prime(&self, params: &PotentialParams) -> f64 {
        let m = self.m as f64;
        (m * m + params.ring_strength()).sqrt()
    }

    /// `ℓ' = n_θ + m'`
    pub fn ell_prime(&self, params: &PotentialParams) -> f64 {
        self.n_theta as f64 + self.m_prime(params)
    }

    /// `κ = ℓ'(ℓ' + 1)`
    pub fn kappa(&self, params: &PotentialParams) -> f64 {
        let l = self.ell_prime(params);
        l * (l + 1.0)
    }

    /// `k̄ = √(1 + 4κ) = 2ℓ' + 1`, the radial Laguerre index.
    pub fn k_bar(&self, params: &PotentialParams) -> f64 {
        2.0 * self.ell_prime(params) + 1.0
    }

    pub fn n_bar(&self, params: &PotentialParams) -> f64 {
        self.n_r as f64 + self.ell_prime(params) + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumNumbers {
    Parabolic(ParabolicState),
    Spherical(SphericalState),
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parabolic(s) => write!(f, "n={} n'={} m'={}", s.n, s.n_prime, s.m_prime),
            Self::Spherical(s) => write!(f, "n_r={} n_theta={} m={}", s.n_r, s.n_theta, s.m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    AnalyticParabolic,
    AnalyticSpherical,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AnalyticParabolic => "analytic_parabolic",
            Self::AnalyticSpherical => "analytic_spherical",
            Self::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub energy_ev: f64,
    /// Energy in units of `eps0`.
    pub energy_internal: f64,
    pub provenance: Provenance,
    pub quantum_numbers: QuantumNumbers,
    pub n_bar: f64,
    /// Estimated absolute error in internal units; zero for closed forms.
    pub error_bound: f64,
}

fn level(params: &PotentialParams, n_bar: f64) -> f64 {
    let z = params.z_eff();
    -z * z / (n_bar * n_bar)
}

/// `E = −δ²σ⁴ ε0 / (n + n' + 1 + β)²`
pub fn energy_parabolic(
    params: &PotentialParams,
    state: &ParabolicState,
    mode: BetaMode,
) -> Result<EigenResult, HartmannError> {
    params.validate()?;
    let n_bar = state.n_bar(params, mode)?;
    let internal = level(params, n_bar);
    Ok(EigenResult {
        energy_ev: params.to_ev(internal),
        energy_internal: internal,
        provenance: Provenance::AnalyticParabolic,
        quantum_numbers: QuantumNumbers::Parabolic(*state),
        n_bar,
        error_bound: 0.0,
    })
}

/// `E = −δ²σ⁴ ε0 / (n_r + ℓ' + 1)²`
pub fn energy_spherical(params: &PotentialParams, state: &SphericalState) -> Result<EigenResult, HartmannError> {
    params.validate()?;
    let n_bar = state.n_bar(params);
    let internal = level(params, n_bar);
    Ok(EigenResult {
        energy_ev: params.to_ev(internal),
        energy_internal: internal,
        provenance: Provenance::AnalyticSpherical,
        quantum_numbers: QuantumNumbers::Spherical(*state),
        n_bar,
        error_bound: 0.0,
    })
}

/// Parabolic states `(n, n', m)` with `n + n' + |m| + 1 = n_bar`, both signs
/// of `m`. Only meaningful without the ring term, where `n̄` is an integer.
pub fn parabolic_shell(n_bar: usize) -> Vec<(ParabolicState, i64)> {
    let mut out = Vec::new();
    let top = n_bar as i64 - 1;
    for m in -top..=top {
        let rest = (top - m.abs()) as usize;
        for n in 0..=rest {
            let state = ParabolicState {
                n,
                n_prime: rest - n,
                m_prime: m.unsigned_abs() as f64,
            };
            out.push((state, m));
        }
    }
    out
}

/// Spherical states with `n_r + n_θ + |m| + 1 = n_bar`.
pub fn spherical_shell(n_bar: usize) -> Vec<SphericalState> {
    let mut out = Vec::new();
    let top = n_bar as i64 - 1;
    for m in -top..=top {
        let rest = (top - m.abs()) as usize;
        for n_theta in 0..=rest {
            out.push(SphericalState::new(rest - n_theta, n_theta, m));
        }
    }
    out
}

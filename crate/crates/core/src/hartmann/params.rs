use super::HartmannError;

/// Ground-state energy scale in eV; `-EPS0_EV` is the hydrogen ground level.
pub const EPS0_EV: f64 = 13.605820;

/// One deformed ring-shaped system.
///
/// Lengths are in units of `a0` and energies in units of `eps0_ev`, with
/// `ħ²/2m = 1`. In these units the potential reads
/// `V = −2Z/r + q δ² σ² / (r² sin²θ)` with `Z = δ σ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub delta: f64,
    pub sigma: f64,
    pub q: f64,
    pub eps0_ev: f64,
    pub a0: f64,
}

impl PotentialParams {
    pub fn new(delta: f64, sigma: f64, q: f64) -> Result<Self, HartmannError> {
        let p = Self {
            delta,
            sigma,
            q,
            eps0_ev: EPS0_EV,
            a0: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Hydrogen-like system with `δσ² = 1` and no ring term.
    pub fn hydrogen() -> Self {
        Self::new(1.0, 1.0, 0.0).expect("unit parameters are valid")
    }

    pub fn with_eps0(mut self, eps0_ev: f64) -> Result<Self, HartmannError> {
        self.eps0_ev = eps0_ev;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), HartmannError> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(HartmannError::InvalidParameter(format!("{name} must be positive (got {v})")))
            }
        };
        positive("delta", self.delta)?;
        positive("sigma", self.sigma)?;
        positive("eps0", self.eps0_ev)?;
        positive("a0", self.a0)?;
        if !(self.q.is_finite() && self.q >= 0.0) {
            return Err(HartmannError::InvalidParameter(format!(
                "q must be non-negative (got {})",
                self.q
            )));
        }
        Ok(())
    }

    /// `Z = δσ²`, the effective Coulomb charge.
    pub fn z_eff(&self) -> f64 {
        self.delta * self.sigma * self.sigma
    }

    /// `q δ² σ²`, the coefficient of the ring term.
    pub fn ring_strength(&self) -> f64 {
        self.q * self.delta * self.delta * self.sigma * self.sigma
    }

    pub fn to_ev(&self, internal: f64) -> f64 {
        internal * self.eps0_ev
    }
}

/// Potential energy in eV at `(r, θ)`, `r` in units of `a0`.
pub fn potential(params: &PotentialParams, r: f64, theta: f64) -> Result<f64, HartmannError> {
    params.validate()?;
    if !(r > 0.0) {
        return Err(HartmannError::OriginSingularity { r });
    }
    let x = r / params.a0;
    let coulomb = -2.0 * params.z_eff() / x;
    let ring = if params.q == 0.0 {
        0.0
    } else {
        let s = theta.sin();
        if s.abs() <= 4.0 * f64::EPSILON {
            return Err(HartmannError::AxisSingularity { theta });
        }
        params.ring_strength() / (x * x * s * s)
    };
    Ok(params.to_ev(coulomb + ring))
}

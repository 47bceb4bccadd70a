/// The three separated equations, each written as `f'' + p f' + c f = 0`
/// with the eigenvalue supplied by the caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparatedOde {
    /// `u'' − (Υ² − ¼)/ξ² u + E ξ² u + β₁ u = 0` in `ξ`.
    ParabolicU { upsilon: f64, energy: f64, separation: f64 },
    /// `Θ'' + cot θ Θ' + (κ − m'²/sin²θ) Θ = 0` in `θ`.
    AngularTheta { kappa: f64, m_prime: f64 },
    /// `U'' + (E − κ/r² + 2Z/r) U = 0` in `r`.
    RadialU { z_eff: f64, kappa: f64, energy: f64 },
}

impl SeparatedOde {
    fn coefficients(&self, x: f64) -> (f64, f64) {
        match *self {
            Self::ParabolicU { upsilon, energy, separation } => {
                (0.0, -(upsilon * upsilon - 0.25) / (x * x) + energy * x * x + separation)
            }
            Self::AngularTheta { kappa, m_prime } => {
                let s = x.sin();
                (x.cos() / s, kappa - m_prime * m_prime / (s * s))
            }
            Self::RadialU { z_eff, kappa, energy } => (0.0, energy - kappa / (x * x) + 2.0 * z_eff / x),
        }
    }
}

/// `max |f'' + p f' + c f| / max |f|` over the grid's interior points, with
/// three-point central differences at the grid spacing.
pub fn residual(ode: &SeparatedOde, f: impl Fn(f64) -> f64, grid: &super::Grid1D) -> f64 {
    let h = grid.spacing;
    let values: Vec<f64> = grid.points().map(&f).collect();
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut worst = 0.0f64;
    for i in 1..values.len() - 1 {
        let x = grid.point(i);
        let (p, c) = ode.coefficients(x);
        let second = (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (h * h);
        let first = (values[i + 1] - values[i - 1]) / (2.0 * h);
        worst = worst.max((second + p * first + c * values[i]).abs());
    }
    worst / peak
}

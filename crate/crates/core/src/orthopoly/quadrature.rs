//! Gauss rules from the eigen-decomposition of the Jacobi matrix
//! (Golub–Welsch).

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::ln_gamma;

use super::OrthoPolyError;

pub const MAX_ORDER: usize = 256;

/// Weight family of a Gauss rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureKind {
    /// Weight 1 on `[-1, 1]`.
    GaussLegendre,
    /// Weight `x^alpha e^{-x}` on `[0, ∞)`.
    GaussLaguerre { alpha: f64 },
    /// Weight `(1-x)^alpha (1+x)^beta` on `[-1, 1]`.
    GaussJacobi { alpha: f64, beta: f64 },
}

impl QuadratureKind {
    pub const fn laguerre() -> Self {
        Self::GaussLaguerre { alpha: 0.0 }
    }

    fn validate(&self) -> Result<(), OrthoPolyError> {
        let ok = |v: f64| v.is_finite() && v > -1.0;
        match *self {
            Self::GaussLegendre => Ok(()),
            Self::GaussLaguerre { alpha } if ok(alpha) => Ok(()),
            Self::GaussJacobi { alpha, beta } if ok(alpha) && ok(beta) => Ok(()),
            other => Err(OrthoPolyError::UnsupportedRule(format!("{other} (exponents must exceed -1)"))),
        }
    }

    /// Diagonal and off-diagonal of the Jacobi matrix, plus the total mass
    /// of the weight.
    fn recurrence(&self, order: usize) -> (Vec<f64>, Vec<f64>, f64) {
        let mut diag = Vec::with_capacity(order);
        let mut off = Vec::with_capacity(order.saturating_sub(1));
        match *self {
            Self::GaussLegendre => {
                diag.resize(order, 0.0);
                for k in 1..order {
                    let k = k as f64;
                    off.push(k / (4.0 * k * k - 1.0).sqrt());
                }
                (diag, off, 2.0)
            }
            Self::GaussLaguerre { alpha } => {
                for k in 0..order {
                    diag.push(2.0 * k as f64 + alpha + 1.0);
                }
                for k in 1..order {
                    let k = k as f64;
                    off.push((k * (k + alpha)).sqrt());
                }
                (diag, off, ln_gamma(alpha + 1.0).exp())
            }
            Self::GaussJacobi { alpha: a, beta: b } => {
                let ab = a + b;
                diag.push((b - a) / (ab + 2.0));
                for k in 1..order {
                    let s = 2.0 * k as f64 + ab;
                    diag.push((b * b - a * a) / (s * (s + 2.0)));
                }
                for k in 1..order {
                    let kf = k as f64;
                    let s = 2.0 * kf + ab;
                    let beta_k = if k == 1 {
                        4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
                    } else {
                        4.0 * kf * (kf + a) * (kf + b) * (kf + ab)
                            / (s * s * (s + 1.0) * (s - 1.0))
                    };
                    off.push(beta_k.sqrt());
                }
                let ln_mass = (ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0)
                    + ln_gamma(b + 1.0)
                    - ln_gamma(ab + 2.0);
                (diag, off, ln_mass.exp())
            }
        }
    }
}

impl fmt::Display for QuadratureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GaussLegendre => write!(f, "gauss_legendre"),
            Self::GaussLaguerre { alpha } => write!(f, "gauss_laguerre(alpha={alpha})"),
            Self::GaussJacobi { alpha, beta } => write!(f, "gauss_jacobi(alpha={alpha}, beta={beta})"),
        }
    }
}

impl FromStr for QuadratureKind {
    type Err = OrthoPolyError;

    /// Parses the parameter-free names; generalized weights are built
    /// directly through the enum.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gauss_legendre" => Ok(Self::GaussLegendre),
            "gauss_laguerre" => Ok(Self::laguerre()),
            other => Err(OrthoPolyError::UnsupportedRule(other.to_string())),
        }
    }
}

/// Nodes and weights of an `order`-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: QuadratureKind,
    pub order: usize,
}

impl QuadratureRule {
    /// `Σ w_i f(x_i)`, i.e. the integral of `f` against the rule's weight.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Integral over `[a, b]` for rules on `[-1, 1]`, by the affine map.
    pub fn integrate_interval(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        half * self.integrate(|t| f(mid + half * t))
    }
}

/// Builds a Gauss rule of the given kind and order (`1..=256`).
pub fn gauss_rule(kind: QuadratureKind, order: usize) -> Result<QuadratureRule, OrthoPolyError> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(OrthoPolyError::OrderOutOfRange { order, max: MAX_ORDER });
    }
    kind.validate()?;
    // one extra recurrence step gives p_order for the Newton polish
    let (diag, off, mass) = kind.recurrence(order + 1);

    let jacobi_matrix = DMatrix::from_fn(order, order, |i, j| {
        if i == j {
            diag[i]
        } else if i + 1 == j {
            off[i]
        } else if j + 1 == i {
            off[j]
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi_matrix).eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);

    let mut weights = Vec::with_capacity(order);
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let eval = OrthonormalEval::at(*x, order, &diag, &off, mass);
            let dx = eval.value / eval.derivative;
            if !dx.is_finite() {
                break;
            }
            *x -= dx;
            if dx.abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
                break;
            }
        }
        let eval = OrthonormalEval::at(*x, order, &diag, &off, mass);
        // Christoffel number: 1 / Σ_{k<order} p̂_k(x)²
        weights.push((-eval.ln_sum_sq).exp());
    }

    Ok(QuadratureRule {
        nodes,
        weights,
        kind,
        order,
    })
}

/// Orthonormal polynomials `p̂_k` of the weight, run up to `p̂_order`.
///
/// Values are carried with a common logarithmic scale so that Laguerre
/// rules with nodes in the hundreds neither overflow nor underflow.
struct OrthonormalEval {
    value: f64,
    derivative: f64,
    ln_sum_sq: f64,
}

impl OrthonormalEval {
    fn at(x: f64, order: usize, diag: &[f64], off: &[f64], mass: f64) -> Self {
        const RESCALE: f64 = 1e150;
        let mut ln_scale = 0.0;
        let (mut p_prev, mut p) = (0.0, 1.0 / mass.sqrt());
        let (mut d_prev, mut d) = (0.0, 0.0);
        let mut sum_sq = 0.0;
        for k in 0..order {
            sum_sq += p * p;
            let back = if k == 0 { 0.0 } else { off[k - 1] };
            let p_next = ((x - diag[k]) * p - back * p_prev) / off[k];
            let d_next = ((x - diag[k]) * d + p - back * d_prev) / off[k];
            p_prev = p;
            p = p_next;
            d_prev = d;
            d = d_next;
            if p.abs() > RESCALE || d.abs() > RESCALE {
                p /= RESCALE;
                p_prev /= RESCALE;
                d /= RESCALE;
                d_prev /= RESCALE;
                sum_sq /= RESCALE * RESCALE;
                ln_scale += RESCALE.ln();
            }
        }
        Self {
            value: p,
            derivative: d,
            ln_sum_sq: sum_sq.ln() + 2.0 * ln_scale,
        }
    }
}

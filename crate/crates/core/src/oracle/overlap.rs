use nalgebra::DMatrix;

use super::OracleError;
use crate::orthopoly::{gauss_rule, QuadratureRule, MAX_ORDER};

/// Largest accepted change of a diagonal entry between orders `N` and `2N`.
pub const DRIFT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Overlap {
    pub matrix: DMatrix<f64>,
    /// `max_i |G_ii(N) − G_ii(2N)|`; `None` when `2N` exceeds the largest rule.
    pub diagonal_drift: Option<f64>,
}

impl Overlap {
    pub fn max_deviation_from_identity(&self) -> f64 {
        let n = self.matrix.nrows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.matrix[(i, j)] - target).abs());
            }
        }
        worst
    }

    /// Set when the quadrature order looks insufficient.
    pub fn warning(&self) -> Option<String> {
        match self.diagonal_drift {
            Some(d) if d > DRIFT_TOL => Some(format!(
                "diagonal drifts by {d:.3e} between orders N and 2N; increase the quadrature order"
            )),
            _ => None,
        }
    }
}

fn gram(family: &[&dyn Fn(f64) -> f64], weight: &dyn Fn(f64) -> f64, rule: &QuadratureRule) -> DMatrix<f64> {
    let n = family.len();
    let samples: Vec<Vec<f64>> = family.iter().map(|f| rule.nodes.iter().map(|&x| f(x)).collect()).collect();
    let w: Vec<f64> = rule.nodes.iter().zip(&rule.weights).map(|(&x, &w)| w * weight(x)).collect();
    DMatrix::from_fn(n, n, |i, j| {
        samples[i].iter().zip(&samples[j]).zip(&w).map(|((a, b), w)| a * b * w).sum()
    })
}

/// Gram matrix `G_ij = Σ_k w_k weight(x_k) f_i(x_k) f_j(x_k)` over the rule,
/// i.e. `∫ ρ_rule weight f_i f_j`.
pub fn overlap_matrix(
    family: &[&dyn Fn(f64) -> f64],
    weight: impl Fn(f64) -> f64,
    rule: &QuadratureRule,
) -> Result<Overlap, OracleError> {
    if family.is_empty() {
        return Err(OracleError::InvalidInput("empty function family".into()));
    }
    let matrix = gram(family, &weight, rule);
    let diagonal_drift = if 2 * rule.order <= MAX_ORDER {
        let doubled = gram(family, &weight, &gauss_rule(rule.kind, 2 * rule.order)?);
        Some(
            (0..family.len())
                .map(|i| (matrix[(i, i)] - doubled[(i, i)]).abs())
                .fold(0.0, f64::max),
        )
    } else {
        None
    };
    Ok(Overlap { matrix, diagonal_drift })
}

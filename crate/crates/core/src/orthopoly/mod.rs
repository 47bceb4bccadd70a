//! Classical orthogonal polynomials and Gauss quadrature.
//!
//! Laguerre and Jacobi evaluators use the three-term recurrences;
//! [`rodrigues_eval`] rebuilds the same families from their weight
//! functions by finite differences and is kept as an independent check.

mod families;
mod polynomial;
mod quadrature;
mod rodrigues;

pub use families::{jacobi, jacobi_norm_sq, laguerre, laguerre_norm_sq, real_factorial};
pub(crate) use families::{jacobi_unchecked, laguerre_unchecked};
pub use polynomial::{Polynomial, TRIM_TOL};
pub use quadrature::{gauss_rule, QuadratureKind, QuadratureRule, MAX_ORDER};
pub use rodrigues::{rodrigues_eval, DEFAULT_RODRIGUES_STEP, MAX_RODRIGUES_ORDER};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OrthoPolyError {
    #[error("parameter {name} = {value} must be finite and greater than -1")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("argument {x} outside [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("finite-difference Rodrigues evaluation unstable: {reason}")]
    UnstableDifference { reason: String },
    #[error("weight function not strictly positive near x = {x}")]
    NonPositiveWeight { x: f64 },
    #[error("quadrature order {order} outside 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("unsupported quadrature rule: {0}")]
    UnsupportedRule(String),
}

use super::{OrthoPolyError, Polynomial};

pub const DEFAULT_RODRIGUES_STEP: f64 = 1e-2;
pub const MAX_RODRIGUES_ORDER: usize = 6;
const STEP_RANGE: (f64, f64) = (1e-4, 1e-1);

/// Evaluates `(1/ρ(x)) dⁿ/dxⁿ [σ(x)ⁿ ρ(x)]` with central differences.
///
/// This is the Rodrigues construction with unit normalization constant, and
/// serves as an independent check on the recurrence evaluators. The n-th
/// central difference at `step` is combined with the one at `step/2` by a
/// single Richardson step, cancelling the `O(h²)` term.
pub fn rodrigues_eval(
    weight: impl Fn(f64) -> f64,
    sigma: &Polynomial,
    n: usize,
    x: f64,
    step: f64,
) -> Result<f64, OrthoPolyError> {
    if n > MAX_RODRIGUES_ORDER {
        return Err(OrthoPolyError::UnstableDifference {
            reason: format!("order {n} exceeds {MAX_RODRIGUES_ORDER}"),
        });
    }
    if !(STEP_RANGE.0..=STEP_RANGE.1).contains(&step) {
        return Err(OrthoPolyError::UnstableDifference {
            reason: format!("step {step} outside [{}, {}]", STEP_RANGE.0, STEP_RANGE.1),
        });
    }
    let rho_x = weight(x);
    if !(rho_x.is_finite() && rho_x > 0.0) {
        return Err(OrthoPolyError::NonPositiveWeight { x });
    }
    if n == 0 {
        return Ok(1.0);
    }

    let generating = |t: f64| -> Result<f64, OrthoPolyError> {
        let w = weight(t);
        if !(w.is_finite() && w > 0.0) {
            return Err(OrthoPolyError::NonPositiveWeight { x: t });
        }
        Ok(sigma.eval(t).powi(n as i32) * w)
    };

    let coarse = central_difference(&generating, n, x, step)?;
    let fine = central_difference(&generating, n, x, 0.5 * step)?;
    let extrapolated = fine + (fine - coarse) / 3.0;
    Ok(extrapolated / rho_x)
}

fn central_difference(
    f: &impl Fn(f64) -> Result<f64, OrthoPolyError>,
    n: usize,
    x: f64,
    h: f64,
) -> Result<f64, OrthoPolyError> {
    let half = n as f64 / 2.0;
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * f(x + (half - k as f64) * h)?;
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc / h.powi(n as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::laguerre;
    use approx::assert_abs_diff_eq;

    fn exp_weight(x: f64) -> f64 {
        (-x).exp()
    }

    /// dⁿ/dxⁿ [xⁿ e^{-x}] / e^{-x} computed symbolically: each derivative maps
    /// the polynomial prefactor P to P' - P.
    fn symbolic_rodrigues_exp(n: usize) -> Polynomial {
        let mut monomial = vec![0.0; n + 1];
        monomial[n] = 1.0;
        let mut p = Polynomial::new(monomial);
        for _ in 0..n {
            p = &p.derivative() - &p;
        }
        p
    }

    #[test]
    fn spec_examples() {
        let sigma = Polynomial::linear(0.0, 1.0);
        assert_eq!(rodrigues_eval(exp_weight, &sigma, 0, 3.0, 1e-2).unwrap(), 1.0);
        assert_abs_diff_eq!(
            rodrigues_eval(exp_weight, &sigma, 1, 1.0, 1e-2).unwrap(),
            0.0,
            epsilon = 1e-9
        );
        let symbolic = symbolic_rodrigues_exp(2).eval(2.0);
        assert_abs_diff_eq!(symbolic, -2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            rodrigues_eval(exp_weight, &sigma, 2, 2.0, 1e-2).unwrap(),
            symbolic,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(2.0 * laguerre(2, 0.0, 2.0).unwrap(), symbolic, epsilon = 1e-14);
    }

    #[test]
    fn symbolic_oracle_matches_scaled_laguerre() {
        for n in 0..=6 {
            let poly = symbolic_rodrigues_exp(n);
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            for &x in &[0.1, 1.0, 2.5, 5.0] {
                assert_abs_diff_eq!(
                    poly.eval(x) / fact,
                    laguerre(n, 0.0, x).unwrap(),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn rejects_unstable_requests() {
        let sigma = Polynomial::linear(0.0, 1.0);
        assert!(matches!(
            rodrigues_eval(exp_weight, &sigma, 7, 1.0, 1e-2),
            Err(OrthoPolyError::UnstableDifference { .. })
        ));
        assert!(rodrigues_eval(exp_weight, &sigma, 2, 1.0, 1e-5).is_err());
        assert!(rodrigues_eval(exp_weight, &sigma, 2, 1.0, 0.5).is_err());
        assert!(matches!(
            rodrigues_eval(|_| -1.0, &sigma, 2, 1.0, 1e-2),
            Err(OrthoPolyError::NonPositiveWeight { .. })
        ));
    }
}

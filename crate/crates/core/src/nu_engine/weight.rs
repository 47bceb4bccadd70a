use crate::orthopoly::Polynomial;

use super::NU_TOL;

/// Closed-form solution of `(σρ)' = τρ`, up to a constant factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFunction {
    /// `(s − origin)^power · e^{rate·s}`, for linear `σ` vanishing at `origin`.
    Laguerre { origin: f64, power: f64, rate: f64 },
    /// `(1 − s)^a (1 + s)^b`, for `σ ∝ 1 − s²`.
    Jacobi { a: f64, b: f64 },
}

impl WeightFunction {
    pub(super) fn from_pearson(sigma: &Polynomial, tau: &Polynomial) -> Option<Self> {
        let (t0, t1) = (tau.coeff(0), tau.coeff(1));
        match sigma.degree() {
            1 => {
                let c1 = sigma.coeff(1);
                let origin = -sigma.coeff(0) / c1;
                Some(Self::Laguerre {
                    origin,
                    power: (tau.eval(origin) - c1) / c1,
                    rate: t1 / c1,
                })
            }
            2 => {
                let (c0, c1, c2) = (sigma.coeff(0), sigma.coeff(1), sigma.coeff(2));
                if c1.abs() > NU_TOL || (c0 + c2).abs() > NU_TOL * c0.abs().max(1.0) {
                    return None;
                }
                // σ = c0 (1 − s²):  τ/c0 = (b − a) − (a + b + 2) s
                let sum = -t1 / c0 - 2.0;
                let diff = t0 / c0;
                Some(Self::Jacobi {
                    a: 0.5 * (sum - diff),
                    b: 0.5 * (sum + diff),
                })
            }
            _ => None,
        }
    }

    pub fn eval(&self, s: f64) -> f64 {
        match *self {
            Self::Laguerre { origin, power, rate } => (s - origin).powf(power) * (rate * s).exp(),
            Self::Jacobi { a, b } => (1.0 - s).powf(a) * (1.0 + s).powf(b),
        }
    }

    /// `(1 − s²)^p` when both Jacobi exponents agree.
    pub fn symmetric_power(&self) -> Option<f64> {
        match *self {
            Self::Jacobi { a, b } if (a - b).abs() < NU_TOL => Some(a),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Central-difference check of (σρ)' − τρ.
    fn pearson_residual(w: &WeightFunction, sigma: &Polynomial, tau: &Polynomial, s: f64) -> f64 {
        let h = 1e-5;
        let g = |t: f64| sigma.eval(t) * w.eval(t);
        ((g(s + h) - g(s - h)) / (2.0 * h) - tau.eval(s) * w.eval(s)) / w.eval(s)
    }

    #[test]
    fn linear_sigma() {
        let sigma = Polynomial::linear(0.0, 2.0);
        let tau = Polynomial::linear(6.0, -2.0);
        let w = WeightFunction::from_pearson(&sigma, &tau).unwrap();
        assert_eq!(w, WeightFunction::Laguerre { origin: 0.0, power: 2.0, rate: -1.0 });
        for s in [0.3, 1.0, 4.0] {
            assert!(pearson_residual(&w, &sigma, &tau, s).abs() < 1e-8);
        }
    }

    #[test]
    fn shifted_linear_sigma() {
        let sigma = Polynomial::linear(-1.0, 1.0);
        let tau = Polynomial::linear(3.0, -1.0);
        let w = WeightFunction::from_pearson(&sigma, &tau).unwrap();
        for s in [1.5, 2.0, 6.0] {
            assert!(pearson_residual(&w, &sigma, &tau, s).abs() < 1e-8);
        }
    }

    #[test]
    fn ring_sigma() {
        let sigma = Polynomial::quadratic(1.0, 0.0, -1.0);
        let tau = Polynomial::linear(0.0, -4.0);
        let w = WeightFunction::from_pearson(&sigma, &tau).unwrap();
        assert_eq!(w.symmetric_power(), Some(1.0));
        let tau = Polynomial::linear(0.5, -3.0);
        let w = WeightFunction::from_pearson(&sigma, &tau).unwrap();
        assert!(w.symmetric_power().is_none());
        for s in [-0.5, 0.1, 0.8] {
            assert!(pearson_residual(&w, &sigma, &tau, s).abs() < 1e-8);
        }
    }

    #[test]
    fn unsupported_shapes() {
        let tau = Polynomial::linear(0.0, -1.0);
        assert!(WeightFunction::from_pearson(&Polynomial::constant(1.0), &tau).is_none());
        assert!(WeightFunction::from_pearson(&Polynomial::quadratic(0.0, 1.0, 1.0), &tau).is_none());
    }
}

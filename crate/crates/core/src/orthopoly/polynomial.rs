use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients below this magnitude are dropped from the top of a polynomial.
pub const TRIM_TOL: f64 = 1e-14;

/// Dense real polynomial, coefficients in ascending degree order.
///
/// The zero polynomial is stored as a single `0.0` coefficient and reports
/// degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() < TRIM_TOL) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        if coeffs.len() == 1 && coeffs[0].abs() < TRIM_TOL {
            coeffs[0] = 0.0;
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 * s`
    pub fn linear(c0: f64, c1: f64) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `c0 + c1 * s + c2 * s^2`
    pub fn quadratic(c0: f64, c1: f64, c2: f64) -> Self {
        Self::new(vec![c0, c1, c2])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `s^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Horner evaluation.
    pub fn eval(&self, s: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * s + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect::<Vec<_>>())
    }

    /// Real roots of a polynomial of degree at most two, ascending.
    pub fn real_roots(&self) -> Vec<f64> {
        match self.degree() {
            1 => vec![-self.coeff(0) / self.coeff(1)],
            2 => {
                let (c, b, a) = (self.coeff(0), self.coeff(1), self.coeff(2));
                let disc = b * b - 4.0 * a * c;
                if disc < 0.0 {
                    return Vec::new();
                }
                // avoids cancellation in the smaller-magnitude root
                let q = -0.5 * (b + b.signum() * disc.sqrt());
                let mut roots = if q == 0.0 {
                    vec![0.0, 0.0]
                } else {
                    vec![q / a, c / q]
                };
                roots.sort_by(f64::total_cmp);
                roots
            }
            _ => Vec::new(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect::<Vec<_>>())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect::<Vec<_>>())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 && !(first && i == self.degree()) {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*s")?,
                _ => write!(f, "{mag}*s^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![1.0, 2.0, 1e-16, 0.0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.leading(), 2.0);
        assert!(Polynomial::new(Vec::<f64>::new()).is_zero());
        assert!(Polynomial::new(vec![1e-15]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::linear(1.0, 1.0);
        let b = Polynomial::linear(-1.0, 1.0);
        let prod = &a * &b;
        assert_eq!(prod.coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!((&a - &a).degree(), 0);
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b).coeffs(), &[0.0, 2.0]);
        assert_eq!(prod.derivative().coeffs(), &[0.0, 2.0]);
        assert_eq!(prod.eval(3.0), 8.0);
        assert_eq!((-&a).coeffs(), &[-1.0, -1.0]);
    }

    #[test]
    fn roots_of_quadratic() {
        let p = Polynomial::quadratic(-1.0, 0.0, 1.0);
        assert_eq!(p.real_roots(), vec![-1.0, 1.0]);
        let p = Polynomial::quadratic(1.0, 0.0, 1.0);
        assert!(p.real_roots().is_empty());
        let p = Polynomial::linear(4.0, 2.0);
        assert_eq!(p.real_roots(), vec![-2.0]);
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::quadratic(1.0, -2.0, 0.5).to_string(), "1 - 2*s + 0.5*s^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}

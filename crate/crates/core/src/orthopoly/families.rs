//! Associated Laguerre and Jacobi polynomials by three-term recurrence.
//!
//! Conventions: `L_n^α(0) = C(n+α, n)` and `P_n^{(a,b)}(1) = C(n+a, n)`,
//! with binomials of real arguments taken through the Gamma function.

use statrs::function::gamma::ln_gamma;

use super::OrthoPolyError;

fn check_parameter(name: &'static str, value: f64) -> Result<(), OrthoPolyError> {
    if value.is_finite() && value > -1.0 {
        Ok(())
    } else {
        Err(OrthoPolyError::InvalidParameter { name, value })
    }
}

/// Associated (generalized) Laguerre polynomial `L_n^α(x)`.
pub fn laguerre(n: usize, alpha: f64, x: f64) -> Result<f64, OrthoPolyError> {
    check_parameter("alpha", alpha)?;
    Ok(laguerre_unchecked(n, alpha, x))
}

pub(crate) fn laguerre_unchecked(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` on `[-1, 1]`.
pub fn jacobi(n: usize, a: f64, b: f64, x: f64) -> Result<f64, OrthoPolyError> {
    check_parameter("a", a)?;
    check_parameter("b", b)?;
    if !(x.abs() <= 1.0 + 1e-12) {
        return Err(OrthoPolyError::OutOfDomain { x, lo: -1.0, hi: 1.0 });
    }
    Ok(jacobi_unchecked(n, a, b, x))
}

pub(crate) fn jacobi_unchecked(n: usize, a: f64, b: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for k in 2..=n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        let denom = 2.0 * kf * (kf + a + b) * (s - 2.0);
        let c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * s;
        let next = (c1 * cur - c2 * prev) / denom;
        prev = cur;
        cur = next;
    }
    cur
}

/// `∫_0^∞ x^α e^{-x} [L_n^α(x)]² dx = Γ(n+α+1)/n!`
pub fn laguerre_norm_sq(n: usize, alpha: f64) -> Result<f64, OrthoPolyError> {
    check_parameter("alpha", alpha)?;
    Ok((ln_gamma(n as f64 + alpha + 1.0) - ln_gamma(n as f64 + 1.0)).exp())
}

/// `∫_{-1}^{1} (1-x)^a (1+x)^b [P_n^{(a,b)}(x)]² dx`
pub fn jacobi_norm_sq(n: usize, a: f64, b: f64) -> Result<f64, OrthoPolyError> {
    check_parameter("a", a)?;
    check_parameter("b", b)?;
    let nf = n as f64;
    let ln_val = if n == 0 {
        (a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
            - ln_gamma(a + b + 2.0)
    } else {
        (a + b + 1.0) * std::f64::consts::LN_2 - (2.0 * nf + a + b + 1.0).ln()
            + ln_gamma(nf + a + 1.0)
            + ln_gamma(nf + b + 1.0)
            - ln_gamma(nf + a + b + 1.0)
            - ln_gamma(nf + 1.0)
    };
    Ok(ln_val.exp())
}

/// `x!` for real `x > -1`, read as `Γ(x+1)`.
pub fn real_factorial(x: f64) -> f64 {
    statrs::function::gamma::gamma(x + 1.0)
}

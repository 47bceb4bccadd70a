use proptest::prelude::*;
use ringshaped_core::hartmann::{angular_problem, parabolic_problem, radial_problem};
use ringshaped_core::nu_engine::{eigenpolynomial, k_candidates, lambda_n, solve, NuProblem, NU_TOL};

/// `σ y'' + τ y' + λ_n y` by central differences, relative to the size of
/// the individual terms.
fn ode_residual(p: &NuProblem, n: usize, s: f64) -> f64 {
    let sol = solve(p).unwrap();
    let lam = lambda_n(p, &sol, n);
    let y = |x: f64| eigenpolynomial(p, &sol, n, x).unwrap();
    let h = 1e-3;
    let (ym, y0, yp) = (y(s - h), y(s), y(s + h));
    let d2 = (yp - 2.0 * y0 + ym) / (h * h);
    let d1 = (yp - ym) / (2.0 * h);
    let terms = [p.sigma().eval(s) * d2, sol.tau.eval(s) * d1, lam * y0];
    let scale = terms.iter().map(|t| t.abs()).sum::<f64>().max(1.0);
    terms.iter().sum::<f64>().abs() / scale
}

fn check_solution(p: &NuProblem, n: usize) -> Result<(), TestCaseError> {
    for k in k_candidates(p).unwrap() {
        let q = p.under_root(k);
        let disc = q.coeff(1).powi(2) - 4.0 * q.coeff(2) * q.coeff(0);
        prop_assert!(disc.abs() < NU_TOL * q.coeff(1).powi(2).max(1.0), "discriminant {disc} at k = {k}");
    }
    let sol = solve(p).unwrap();
    prop_assert!(sol.tau.derivative().coeff(0) < 0.0);
    for i in 0..2 {
        let rebuilt = p.tau_tilde().coeff(i) + 2.0 * sol.pi.coeff(i);
        prop_assert!((sol.tau.coeff(i) - rebuilt).abs() < 1e-12);
    }
    prop_assert!((sol.lambda - (sol.k + sol.pi.derivative().coeff(0))).abs() < 1e-12);
    prop_assert!(sol.quantization_mismatch(p, n).abs() < 1e-10, "mismatch {}", sol.quantization_mismatch(p, n));
    Ok(())
}

proptest! {
    #[test]
    fn parabolic_instances(eps in 0.1f64..2.0, upsilon in 0.0f64..3.0, n in 0usize..4) {
        // quantized when β₁ = −α₁² = 2ε(2n + 1 + Υ)
        let alpha1_sq = -2.0 * eps * (2.0 * n as f64 + 1.0 + upsilon);
        let p = parabolic_problem(eps, alpha1_sq, upsilon * upsilon - 0.25).unwrap();
        check_solution(&p, n)?;
        for i in 1..=20 {
            let s = 0.3 * i as f64;
            prop_assert!(ode_residual(&p, n, s) < 1e-6);
        }
    }

    #[test]
    fn angular_instances(m in 0.0f64..3.0, n in 0usize..4) {
        let l = n as f64 + m;
        let p = angular_problem(l * (l + 1.0), m).unwrap();
        check_solution(&p, n)?;
        for i in 0..20 {
            let x = -0.95 + 0.1 * i as f64;
            prop_assert!(ode_residual(&p, n, x) < 1e-6);
        }
    }

    #[test]
    fn radial_instances(sqrt_e in 0.05f64..1.5, kappa in 0.0f64..12.0, n in 0usize..4) {
        let a_prime = -sqrt_e * (2.0 * n as f64 + 1.0 + (1.0 + 4.0 * kappa).sqrt());
        let p = radial_problem(sqrt_e * sqrt_e, a_prime, kappa).unwrap();
        check_solution(&p, n)?;
        for i in 1..=20 {
            let r = 0.5 * i as f64 / sqrt_e;
            prop_assert!(ode_residual(&p, n, r) < 1e-6);
        }
    }
}

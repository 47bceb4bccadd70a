use super::*;
use crate::hartmann::{energy_spherical, PotentialParams, SphericalState, SphericalWavefunction};
use crate::orthopoly::{gauss_rule, QuadratureKind};
use approx::assert_abs_diff_eq;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn grid_invariants() {
    let g = Grid1D::new(0.5, 2.0, 16).unwrap();
    assert_abs_diff_eq!(g.spacing, 0.1, epsilon = 1e-15);
    assert_eq!(g.points().count(), 16);
    assert_eq!(g.point(15), 2.0);
    assert!(Grid1D::new(0.0, 1.0, 15).is_err());
    assert!(Grid1D::new(1.0, 1.0, 20).is_err());
    let r = Grid1D::radial(40.0, 4000).unwrap();
    assert_abs_diff_eq!(r.lo, 0.01, epsilon = 1e-15);
    let f = r.refined().unwrap();
    assert_abs_diff_eq!(f.spacing, 0.005, epsilon = 1e-15);
    assert_abs_diff_eq!(f.lo, 0.005, epsilon = 1e-15);
    let a = Grid1D::angular(100).unwrap();
    assert_abs_diff_eq!(a.lo + a.hi, std::f64::consts::PI, epsilon = 1e-14);
}

#[test]
fn radial_examples() {
    let s = radial_eigen(1.0, 0.0, &Grid1D::radial(30.0, 4001).unwrap(), 1).unwrap();
    assert!(rel(s.eigenvalues[0], -1.0) < 1e-4);
    let s = radial_eigen(1.0, 2.0, &Grid1D::radial(60.0, 4001).unwrap(), 1).unwrap();
    assert!(rel(s.eigenvalues[0], -0.25) < 1e-4);

    let p = PotentialParams::new(1.0, 1.0, 0.5).unwrap();
    let state = SphericalState::new(0, 0, 1);
    let l = 1.5f64.sqrt();
    let want = energy_spherical(&p, &state).unwrap();
    let grid = Grid1D::radial(default_radial_box(want.n_bar, 1.0), 4001).unwrap();
    let s = radial_eigen(1.0, l * (l + 1.0), &grid, 1).unwrap();
    assert!(rel(s.eigenvalues[0], want.energy_internal) < 1e-4);
}

#[test]
fn radial_spectrum_is_second_order() {
    let grid = Grid1D::radial(120.0, 2001).unwrap();
    let s = radial_eigen(1.0, 0.0, &grid, 4).unwrap();
    let exact: Vec<f64> = (1..=4).map(|n| -1.0 / (n * n) as f64).collect();
    for (e, w) in s.eigenvalues.iter().zip(&exact) {
        assert!(rel(*e, *w) < 2e-3);
    }
    for ratio in s.convergence_ratio(&exact) {
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }
    for (e, w) in s.extrapolated().iter().zip(&exact) {
        assert!(rel(*e, *w) < 1e-5);
    }
    assert!(s.eigenvalues.windows(2).all(|w| w[0] < w[1]));
    assert!(s.convergence_estimate.iter().all(|e| e.is_finite()));
}

#[test]
fn radial_failure_modes() {
    let err = radial_eigen(1.0, 0.0, &Grid1D::radial(8.0, 2001).unwrap(), 2).unwrap_err();
    assert!(matches!(err, OracleError::BoxTooSmall { index: 1, .. }), "{err:?}");
    let err = radial_eigen(1.0, 0.0, &Grid1D::radial(30.0, 33).unwrap(), 1).unwrap_err();
    assert!(matches!(err, OracleError::Unconverged { .. }), "{err:?}");
    assert!(radial_eigen(1.0, 0.0, &Grid1D::new(0.0, 30.0, 100).unwrap(), 1).is_err());
    assert!(radial_eigen(-1.0, 0.0, &Grid1D::radial(30.0, 100).unwrap(), 1).is_err());
    assert!(radial_eigen(1.0, 0.0, &Grid1D::radial(30.0, 100).unwrap(), 11).is_err());
}

#[test]
fn bound_states_keep_appearing() {
    // Coulomb: every larger box holds at least the requested number of levels
    for count in [2, 5, 8] {
        let hi = default_radial_box(count as f64, 1.0);
        let s = radial_eigen(1.0, 0.0, &Grid1D::radial(hi, 6000).unwrap(), count).unwrap();
        assert!(s.eigenvalues.iter().all(|&e| e < 0.0));
    }
}

#[test]
fn angular_examples() {
    let grid = Grid1D::angular(1000).unwrap();
    let s = angular_eigen(0.0, &grid, 3).unwrap();
    for (k, w) in s.eigenvalues.iter().zip([0.0, 2.0, 6.0]) {
        assert_abs_diff_eq!(*k, w, epsilon = 1e-3);
    }
    let s = angular_eigen(1.0, &grid, 2).unwrap();
    for (k, w) in s.eigenvalues.iter().zip([2.0, 6.0]) {
        assert_abs_diff_eq!(*k, w, epsilon = 1e-3);
    }
    let m = 2f64.sqrt();
    let s = angular_eigen(m, &grid, 1).unwrap();
    assert_abs_diff_eq!(s.eigenvalues[0], m * (m + 1.0), epsilon = 1e-3);
    for m in [0.0, 1.0, 2.0, 3.0] {
        let s = angular_eigen(m, &grid, 4).unwrap();
        for (j, k) in s.eigenvalues.iter().enumerate() {
            let l = j as f64 + m;
            assert_abs_diff_eq!(*k, l * (l + 1.0), epsilon = 1e-3);
        }
    }
    assert!(angular_eigen(1.0, &Grid1D::new(0.0, 3.0, 100).unwrap(), 1).is_err());
}

fn hydrogen(state: SphericalState) -> SphericalWavefunction {
    SphericalWavefunction::new(&PotentialParams::hydrogen(), &state).unwrap()
}

#[test]
fn residual_examples() {
    let wf = hydrogen(SphericalState::new(0, 0, 0));
    let ode = SeparatedOde::RadialU {
        z_eff: 1.0,
        kappa: 0.0,
        energy: wf.energy_internal(),
    };
    // truncation error h²/12 max|U''''| / max|U| with U ∝ r e^{−r}
    let coarse = Grid1D::radial(40.0, 4001).unwrap();
    let h = coarse.spacing;
    let predicted = h * h / 12.0 * 4.0 / (-1f64).exp();
    let r = residual(&ode, |x| wf.radial(x), &coarse);
    assert!(rel(r, predicted) < 0.05, "{r} vs {predicted}");
    assert!(residual(&ode, |x| wf.radial(x), &Grid1D::radial(40.0, 40001).unwrap()) < 1e-5);

    let wf = hydrogen(SphericalState::new(0, 1, 0));
    let ode = SeparatedOde::AngularTheta { kappa: 2.0, m_prime: 0.0 };
    let grid = Grid1D::new(0.1, std::f64::consts::PI - 0.1, 4001).unwrap();
    assert!(residual(&ode, |t| wf.angular(t.cos()), &grid) < 1e-6);
}

#[test]
fn residual_negative_control() {
    let wf = hydrogen(SphericalState::new(0, 0, 0));
    let grid = Grid1D::radial(40.0, 40001).unwrap();
    let wrong = SeparatedOde::RadialU {
        z_eff: 1.0,
        kappa: 0.0,
        energy: 1.1 * wf.energy_internal(),
    };
    assert!(residual(&wrong, |x| wf.radial(x), &grid) > 1e-2);
}

#[test]
fn residual_decreases_with_resolution() {
    let wf = hydrogen(SphericalState::new(1, 1, 0));
    let ode = SeparatedOde::RadialU {
        z_eff: 1.0,
        kappa: 2.0,
        energy: wf.energy_internal(),
    };
    let mut last = f64::INFINITY;
    for n in [500, 1000, 2000, 4000, 8000, 16000] {
        let r = residual(&ode, |x| wf.radial(x), &Grid1D::radial(90.0, n).unwrap());
        assert!(r <= last + 1e-9, "{r} after {last}");
        last = r;
    }
}

#[test]
fn overlap_examples() {
    // angular states l' = 1..=4 at m' = 1 against dx on [−1, 1]
    let states: Vec<_> = (0..4).map(|n| hydrogen(SphericalState::new(0, n, 1))).collect();
    let fns: Vec<Box<dyn Fn(f64) -> f64>> = states
        .iter()
        .map(|wf| Box::new(move |x: f64| wf.angular(x)) as Box<dyn Fn(f64) -> f64>)
        .collect();
    let refs: Vec<&dyn Fn(f64) -> f64> = fns.iter().map(|f| f.as_ref()).collect();
    let rule = gauss_rule(QuadratureKind::GaussLegendre, 16).unwrap();
    let o = overlap_matrix(&refs, |_| 1.0, &rule).unwrap();
    assert!(o.max_deviation_from_identity() < 1e-8);
    assert!(o.warning().is_none());

    let single = overlap_matrix(&refs[..1], |_| 1.0, &rule).unwrap();
    assert_abs_diff_eq!(single.matrix[(0, 0)], 1.0, epsilon = 1e-12);

    // radial states n_r = 0..=3 at l' = 0, each with its own decay rate
    let states: Vec<_> = (0..4).map(|n| hydrogen(SphericalState::new(n, 0, 0))).collect();
    let scale = 4.0 / 2.0;
    let fns: Vec<Box<dyn Fn(f64) -> f64>> = states
        .iter()
        .map(|wf| Box::new(move |t: f64| wf.radial(scale * t)) as Box<dyn Fn(f64) -> f64>)
        .collect();
    let refs: Vec<&dyn Fn(f64) -> f64> = fns.iter().map(|f| f.as_ref()).collect();
    let rule = gauss_rule(QuadratureKind::laguerre(), 120).unwrap();
    let o = overlap_matrix(&refs, |t| scale * t.exp(), &rule).unwrap();
    assert!(o.max_deviation_from_identity() < 1e-7, "{}", o.matrix);

    // a too-coarse rule is flagged
    let coarse = gauss_rule(QuadratureKind::laguerre(), 3).unwrap();
    assert!(overlap_matrix(&refs, |t| scale * t.exp(), &coarse).unwrap().warning().is_some());
}

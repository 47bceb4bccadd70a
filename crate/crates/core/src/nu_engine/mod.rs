//! Nikiforov–Uvarov reduction of hypergeometric-type equations.
//!
//! An equation `ψ'' + (τ̃/σ) ψ' + (σ̃/σ²) ψ = 0` with `deg σ, deg σ̃ ≤ 2` and
//! `deg τ̃ ≤ 1` is factored as `ψ = φ y`, where `φ'/φ = π/σ` and `y` solves
//! `σ y'' + τ y' + λ y = 0` with `τ = τ̃ + 2π`. The polynomial `π` must make
//! `((σ' − τ̃)/2)² − σ̃ + kσ` a perfect square, which fixes the admissible
//! constants `k`; the branch with `τ' < 0` that keeps `φ` regular is the
//! bound-state solution, and `λ = k + π'` must equal
//! `λ_n = −n τ' − n(n−1) σ''/2` for a polynomial `y_n` to exist.
//!
//! Every quantity here is recomputed from the `(σ, τ̃, σ̃)` triple; nothing is
//! read off a pre-solved closed form.

mod twofold;
mod weight;

pub use weight::WeightFunction;

use crate::orthopoly::{jacobi, laguerre, OrthoPolyError, Polynomial};
use twofold::Twofold;

/// Absolute tolerance for perfect-square and admissibility decisions.
pub const NU_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NuError {
    #[error("{name} has degree {degree}, at most {max} allowed")]
    DegreeTooHigh { name: &'static str, degree: usize, max: usize },
    #[error("sigma is identically zero")]
    ZeroSigma,
    #[error("no real k makes the under-root expression a perfect square")]
    NoRealK,
    #[error("under-root expression does not depend on s for any k")]
    Degenerate,
    #[error("under-root expression {expr} is not a perfect square at k = {k}")]
    NotPerfectSquare { k: f64, expr: String },
    #[error("no candidate branch has tau' < 0")]
    NoAdmissibleBranch,
    #[error("weight function not available in closed form for sigma = {0}")]
    UnsupportedSigma(String),
    #[error("quantization root not bracketed in [{lo}, {hi}]")]
    NotBracketed { lo: f64, hi: f64 },
    #[error(transparent)]
    Polynomial(#[from] OrthoPolyError),
}

/// The `(σ, τ̃, σ̃)` triple of a hypergeometric-type equation.
#[derive(Debug, Clone, PartialEq)]
pub struct NuProblem {
    sigma: Polynomial,
    tau_tilde: Polynomial,
    sigma_tilde: Polynomial,
}

impl NuProblem {
    pub fn new(sigma: Polynomial, tau_tilde: Polynomial, sigma_tilde: Polynomial) -> Result<Self, NuError> {
        for (name, poly, max) in [("sigma", &sigma, 2), ("tau_tilde", &tau_tilde, 1), ("sigma_tilde", &sigma_tilde, 2)] {
            if poly.degree() > max {
                return Err(NuError::DegreeTooHigh { name, degree: poly.degree(), max });
            }
        }
        if sigma.is_zero() {
            return Err(NuError::ZeroSigma);
        }
        Ok(Self { sigma, tau_tilde, sigma_tilde })
    }

    pub fn sigma(&self) -> &Polynomial {
        &self.sigma
    }

    pub fn tau_tilde(&self) -> &Polynomial {
        &self.tau_tilde
    }

    pub fn sigma_tilde(&self) -> &Polynomial {
        &self.sigma_tilde
    }

    /// `(σ' − τ̃)/2`, the part of `π` outside the square root.
    pub fn half_drift(&self) -> Polynomial {
        (&self.sigma.derivative() - &self.tau_tilde).scale(0.5)
    }

    /// `((σ' − τ̃)/2)² − σ̃ + kσ`
    pub fn under_root(&self, k: f64) -> Polynomial {
        let a = self.half_drift();
        &(&(&a * &a) - &self.sigma_tilde) + &self.sigma.scale(k)
    }

    /// Open interval between the real roots of `σ` on which the equation
    /// is posed, when `σ` determines one.
    pub fn domain(&self) -> Option<(f64, f64)> {
        let roots = self.sigma.real_roots();
        match (self.sigma.degree(), roots.as_slice()) {
            (1, &[r]) if self.sigma.leading() > 0.0 => Some((r, f64::INFINITY)),
            (1, &[r]) => Some((f64::NEG_INFINITY, r)),
            (2, &[r1, r2]) if self.sigma.leading() < 0.0 && r2 > r1 => Some((r1, r2)),
            _ => None,
        }
    }
}

/// One `(k, π)` pair offered to [`select_branch`].
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub k: f64,
    pub pi: Polynomial,
}

/// How the returned branch was chosen among the candidates.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSelection {
    /// Candidates with `τ' < 0`.
    pub admissible: usize,
    /// Smallest exponent of `φ` at the roots of `σ`; larger is more regular.
    pub regularity: f64,
    /// Whether the zero of `τ` lies inside [`NuProblem::domain`].
    pub tau_root_in_domain: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NuSolution {
    pub k: f64,
    pub pi: Polynomial,
    pub tau: Polynomial,
    /// `k + π'`
    pub lambda: f64,
    /// `None` when `σ` is outside the closed-form families.
    pub rho: Option<WeightFunction>,
    pub selection: BranchSelection,
}

impl NuSolution {
    /// `(k + π') − λ_n`; zero when the problem is quantized at level `n`.
    pub fn quantization_mismatch(&self, problem: &NuProblem, n: usize) -> f64 {
        self.lambda - lambda_n(problem, self, n)
    }

    /// `φ'/φ = π/σ` at `s`.
    pub fn phi_log_derivative(&self, problem: &NuProblem, s: f64) -> f64 {
        self.pi.eval(s) / problem.sigma.eval(s)
    }
}

/// All real `k` that turn the under-root quadratic into a perfect square,
/// ascending.
///
/// The discriminant of `q2(k) s² + q1(k) s + q0(k)` is itself a quadratic in
/// `k`, since each coefficient is affine in `k`.
pub fn k_candidates(p: &NuProblem) -> Result<Vec<f64>, NuError> {
    let a = p.half_drift();
    let base = &(&a * &a) - &p.sigma_tilde;
    let (b0, b1, b2) = (base.coeff(0), base.coeff(1), base.coeff(2));
    let (s0, s1, s2) = (p.sigma.coeff(0), p.sigma.coeff(1), p.sigma.coeff(2));

    if [b1, b2, s1, s2].iter().all(|c| c.abs() < NU_TOL) {
        return Err(NuError::Degenerate);
    }

    // the discriminant is formed in double-double: close roots otherwise
    // come out with errors of order sqrt(eps)
    let t = Twofold::from;
    let four = t(4.0);
    let d2t = t(s1) * t(s1) - four * t(s2) * t(s0);
    let d1t = t(2.0 * b1) * t(s1) - four * (t(b2) * t(s0) + t(s2) * t(b0));
    let d0t = t(b1) * t(b1) - four * t(b2) * t(b0);
    let (d2, d1, d0) = (d2t.value(), d1t.value(), d0t.value());
    let scale = d2.abs().max(d1.abs()).max(d0.abs()).max(1.0);

    if d2.abs() < NU_TOL * scale {
        if d1.abs() < NU_TOL * scale {
            return if d0.abs() < NU_TOL * scale {
                Err(NuError::Degenerate)
            } else {
                Err(NuError::NoRealK)
            };
        }
        return Ok(vec![-d0 / d1]);
    }

    let mut disc = d1t * d1t - four * d2t * d0t;
    if disc.value() < 0.0 {
        if disc.value().abs() <= 1e-12 * (d1 * d1 + (4.0 * d2 * d0).abs()) {
            disc = t(0.0);
        } else {
            return Err(NuError::NoRealK);
        }
    }
    let root = disc.sqrt();
    let q = (t(-0.5) * (d1t + if d1 < 0.0 { -root } else { root })).value();
    let mut roots = if q == 0.0 { vec![0.0] } else { vec![q / d2, d0 / q] };
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|x, y| (*x - *y).abs() <= 1e-12 * x.abs().max(1.0));
    Ok(roots)
}

/// Both branches `(σ' − τ̃)/2 ± √(…)` at a given `k`, `+` first.
pub fn pi_branches(p: &NuProblem, k: f64) -> Result<[Polynomial; 2], NuError> {
    let q = p.under_root(k);
    let (q0, q1, q2) = (q.coeff(0), q.coeff(1), q.coeff(2));
    let not_square = || NuError::NotPerfectSquare { k, expr: q.to_string() };

    let root = if q2.abs() <= NU_TOL {
        if q1.abs() > NU_TOL || q0 < -NU_TOL {
            return Err(not_square());
        }
        Polynomial::constant(q0.max(0.0).sqrt())
    } else if q2 > 0.0 {
        let disc = q1 * q1 - 4.0 * q2 * q0;
        if disc.abs() > NU_TOL * (q1 * q1).max(1.0) {
            return Err(not_square());
        }
        let lead = q2.sqrt();
        Polynomial::linear(q1 / (2.0 * lead), lead)
    } else {
        return Err(not_square());
    };

    let a = p.half_drift();
    Ok([&a + &root, &a - &root])
}

/// Picks the bound-state branch: `τ' < 0`, then the largest regularity
/// exponent of `φ` at the roots of `σ`. Ties keep the earlier candidate.
pub fn select_branch(p: &NuProblem, candidates: &[Candidate]) -> Result<NuSolution, NuError> {
    let roots = p.sigma.real_roots();
    let sigma_prime = p.sigma.derivative();

    let mut admissible = 0;
    let mut best: Option<(f64, &Candidate, Polynomial)> = None;
    for cand in candidates {
        let tau = &p.tau_tilde + &cand.pi.scale(2.0);
        if tau.derivative().coeff(0) >= -NU_TOL {
            continue;
        }
        admissible += 1;
        let regularity = roots
            .iter()
            .filter_map(|&r| {
                let slope = sigma_prime.eval(r);
                (slope.abs() > NU_TOL).then(|| cand.pi.eval(r) / slope)
            })
            .fold(f64::INFINITY, f64::min);
        let regularity = if regularity.is_finite() { regularity } else { 0.0 };
        if best.as_ref().is_none_or(|(score, _, _)| regularity > score + 1e-12) {
            best = Some((regularity, cand, tau));
        }
    }

    let (regularity, cand, tau) = best.ok_or(NuError::NoAdmissibleBranch)?;
    let tau_root_in_domain = match (p.domain(), tau.real_roots().first()) {
        (Some((lo, hi)), Some(&root)) => root > lo && root < hi,
        _ => false,
    };
    let lambda = cand.k + cand.pi.derivative().coeff(0);
    let mut sol = NuSolution {
        k: cand.k,
        pi: cand.pi.clone(),
        tau,
        lambda,
        rho: None,
        selection: BranchSelection {
            admissible,
            regularity,
            tau_root_in_domain,
        },
    };
    sol.rho = weight_function(p, &sol).ok();
    Ok(sol)
}

/// Runs the full reduction: every real `k`, both `π` branches, selection.
pub fn solve(p: &NuProblem) -> Result<NuSolution, NuError> {
    let mut candidates = Vec::new();
    let mut last_err = None;
    for k in k_candidates(p)? {
        match pi_branches(p, k) {
            Ok(branches) => candidates.extend(branches.into_iter().map(|pi| Candidate { k, pi })),
            Err(e) => last_err = Some(e),
        }
    }
    if candidates.is_empty() {
        return Err(last_err.unwrap_or(NuError::NoRealK));
    }
    select_branch(p, &candidates)
}

/// `λ_n = −n τ' − n(n−1) σ''/2`
pub fn lambda_n(p: &NuProblem, sol: &NuSolution, n: usize) -> f64 {
    let nf = n as f64;
    let tau_prime = sol.tau.derivative().coeff(0);
    let sigma_second = p.sigma.derivative().derivative().coeff(0);
    -nf * tau_prime - nf * (nf - 1.0) * sigma_second / 2.0
}

/// Solves the Pearson equation `(σρ)' = τρ` for the two supported shapes of
/// `σ`: linear, and a multiple of `1 − s²`.
pub fn weight_function(p: &NuProblem, sol: &NuSolution) -> Result<WeightFunction, NuError> {
    WeightFunction::from_pearson(&p.sigma, &sol.tau)
        .ok_or_else(|| NuError::UnsupportedSigma(p.sigma.to_string()))
}

/// The polynomial solution `y_n(s)` of `σ y'' + τ y' + λ_n y = 0`, evaluated
/// through the Laguerre or Jacobi family matching the weight.
pub fn eigenpolynomial(p: &NuProblem, sol: &NuSolution, n: usize, s: f64) -> Result<f64, NuError> {
    match weight_function(p, sol)? {
        WeightFunction::Laguerre { origin, power, rate } if rate < 0.0 => {
            Ok(laguerre(n, power, -rate * (s - origin))?)
        }
        WeightFunction::Jacobi { a, b } => Ok(jacobi(n, a, b, s)?),
        WeightFunction::Laguerre { .. } => Err(NuError::UnsupportedSigma(format!(
            "{} with non-decaying weight",
            p.sigma
        ))),
    }
}

/// Finds the parameter value in `bracket` at which the problem built by
/// `build` is quantized at level `n`, i.e. `k + π' = λ_n`.
///
/// Bisection on the mismatch; the bracket must straddle a sign change.
pub fn solve_quantization(
    n: usize,
    bracket: (f64, f64),
    build: impl Fn(f64) -> Result<NuProblem, NuError>,
) -> Result<f64, NuError> {
    let mismatch = |x: f64| -> Result<f64, NuError> {
        let problem = build(x)?;
        let sol = solve(&problem)?;
        Ok(sol.quantization_mismatch(&problem, n))
    };
    let (mut lo, mut hi) = bracket;
    let mut f_lo = mismatch(lo)?;
    let f_hi = mismatch(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(NuError::NotBracketed { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = mismatch(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

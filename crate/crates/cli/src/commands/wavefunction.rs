use std::f64::consts::PI;

use num_complex::Complex64;
use ringshaped_core::hartmann::{
    BetaMode, HartmannError, ParabolicState, ParabolicWavefunction, SphericalState, SphericalWavefunction,
};

use crate::args::{Axis, WaveCoords, WavefunctionArgs};
use crate::{Cell, CliError, Report, RunConfig};

/// Refuse grids with more rows than this.
pub const MAX_ROWS: usize = 10_000_000;

impl Axis {
    fn check(&self, name: &str) -> Result<(), CliError> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(CliError::Invalid(format!("{name}: need finite lo < hi (got {}:{})", self.lo, self.hi)));
        }
        if self.points < 2 {
            return Err(CliError::Invalid(format!("{name}: need at least 2 points (got {})", self.points)));
        }
        Ok(())
    }

    fn value(&self, i: usize) -> f64 {
        self.lo + (self.hi - self.lo) * i as f64 / (self.points - 1) as f64
    }

    /// Trapezoid weight of node `i`.
    fn weight(&self, i: usize) -> f64 {
        let h = (self.hi - self.lo) / (self.points - 1) as f64;
        if i == 0 || i + 1 == self.points {
            0.5 * h
        } else {
            h
        }
    }
}

enum Sampler {
    Spherical(SphericalWavefunction),
    Parabolic { wf: ParabolicWavefunction, negative_m: bool },
}

impl Sampler {
    fn eval(&self, c1: f64, c2: f64, c3: f64) -> Result<Complex64, HartmannError> {
        match self {
            Self::Spherical(wf) => wf.eval(c1, c2, c3),
            Self::Parabolic { wf, negative_m } => {
                let psi = wf.eval(c1, c2, c3)?;
                Ok(if *negative_m { psi.conj() } else { psi })
            }
        }
    }

    fn volume(&self, c1: f64, c2: f64) -> f64 {
        match self {
            Self::Spherical(_) => c1 * c1 * c2.sin(),
            Self::Parabolic { .. } => (c1 * c1 + c2 * c2) * c1 * c2,
        }
    }
}

fn state_flags(args: &WavefunctionArgs) -> Result<(usize, usize), CliError> {
    let (first, second, wrong) = match args.coords {
        WaveCoords::Spherical => (args.n_r, args.n_theta, args.n.is_some() || args.n_prime.is_some()),
        WaveCoords::Parabolic => (args.n, args.n_prime, args.n_r.is_some() || args.n_theta.is_some()),
    };
    if wrong {
        let hint = match args.coords {
            WaveCoords::Spherical => "spherical states take --n-r, --n-theta, --m",
            WaveCoords::Parabolic => "parabolic states take --n, --n-prime, --m",
        };
        return Err(CliError::Invalid(hint.into()));
    }
    Ok((first.unwrap_or(0), second.unwrap_or(0)))
}

/// Samples `Ψ` row-major over `grid1 × grid2 × grid3` and reports the
/// trapezoid estimate of `∫|Ψ|² dV` over the grid in the footer.
pub fn cmd_wavefunction(cfg: &RunConfig, args: &WavefunctionArgs) -> Result<Report, CliError> {
    let p = &cfg.params;
    let (n1, n2) = state_flags(args)?;
    let m_abs = args.m.unsigned_abs() as f64;
    // exact mode is about the parabolic constant β = √(Υ² − ¼); its
    // spherical counterpart is m'
    let probe = ParabolicState::new(n1, n2, m_abs)?;
    let beta = probe.beta(p, cfg.mode)?;

    let (sampler, names, defaults, energy, n_bar) = match args.coords {
        WaveCoords::Spherical => {
            let state = SphericalState::new(n1, n2, args.m);
            let wf = SphericalWavefunction::new(p, &state)?;
            let n_bar = state.n_bar(p);
            let r = Axis { lo: 0.05, hi: 20.0 * n_bar * n_bar / p.z_eff(), points: 100 };
            let theta = Axis { lo: 0.0, hi: PI, points: 49 };
            let energy = wf.energy_internal();
            (Sampler::Spherical(wf), ["r", "theta", "phi"], [r, theta], energy, n_bar)
        }
        WaveCoords::Parabolic => {
            let wf = ParabolicWavefunction::new(p, &probe, cfg.mode)?;
            let n_bar = probe.n_bar(p, cfg.mode)?;
            let hi = (60.0 / wf.epsilon).sqrt() + 1.0;
            let axis = Axis { lo: 0.01, hi, points: 80 };
            let energy = wf.energy_internal();
            let negative_m = args.m < 0;
            (Sampler::Parabolic { wf, negative_m }, ["xi", "eta", "phi"], [axis, axis], energy, n_bar)
        }
    };
    let g1 = args.grid1.unwrap_or(defaults[0]);
    let g2 = args.grid2.unwrap_or(defaults[1]);
    let g3 = args.grid3.unwrap_or(Axis { lo: 0.0, hi: 2.0 * PI, points: 9 });
    g1.check("grid1")?;
    g2.check("grid2")?;
    g3.check("grid3")?;
    let rows = g1.points.saturating_mul(g2.points).saturating_mul(g3.points);
    if rows > MAX_ROWS {
        return Err(CliError::Invalid(format!("grid has {rows} points, limit is {MAX_ROWS}")));
    }

    let mut report = Report::new(vec!["coord1", "coord2", "coord3", "re_psi", "im_psi", "density"]);
    report.header.push(format!("coord1,coord2,coord3 = {}", names.join(",")));
    report.header.push(format!(
        "state {}: n1={n1} n2={n2} m={} beta={beta:.11e} n_bar={n_bar:.11e} energy_internal={energy:.11e} energy_ev={:.6}",
        match args.coords {
            WaveCoords::Spherical => "spherical",
            WaveCoords::Parabolic => "parabolic",
        },
        args.m,
        p.to_ev(energy)
    ));
    let mut norm = 0.0;
    for i in 0..g1.points {
        let c1 = g1.value(i);
        for j in 0..g2.points {
            let c2 = g2.value(j);
            let dv = sampler.volume(c1, c2) * g1.weight(i) * g2.weight(j);
            for k in 0..g3.points {
                let c3 = g3.value(k);
                let psi = sampler.eval(c1, c2, c3)?;
                let density = psi.norm_sqr();
                norm += density * dv * g3.weight(k);
                report.push(vec![
                    Cell::Real(c1),
                    Cell::Real(c2),
                    Cell::Real(c3),
                    Cell::Real(psi.re),
                    Cell::Real(psi.im),
                    Cell::Real(density),
                ]);
            }
        }
    }
    report.footer.push(format!("norm_on_grid: {norm:.6}"));
    if cfg.mode == BetaMode::Exact && matches!(args.coords, WaveCoords::Spherical) {
        report.footer.push("exact mode does not change spherical eigenfunctions".into());
    }
    Ok(report)
}

use std::collections::BTreeSet;

use ringshaped_core::hartmann::{
    energy_parabolic, energy_spherical, parabolic_shell, spherical_shell, HartmannError,
};

use super::check_nbar_max;
use crate::args::{Coords, SpectrumArgs};
use crate::{Cell, CliError, Report, RunConfig};

#[derive(Debug, Clone, PartialEq)]
struct Level {
    coords: &'static str,
    n1: usize,
    n2: usize,
    m: i64,
    n_bar: f64,
    internal: f64,
    ev: f64,
}

/// Every state whose integer shell index `n1 + n2 + |m| + 1` is at most
/// `--nbar-max`, sorted by energy and then by quantum numbers.
pub fn cmd_spectrum(cfg: &RunConfig, args: &SpectrumArgs) -> Result<Report, CliError> {
    check_nbar_max(args.nbar_max)?;
    let p = &cfg.params;
    let mut levels = Vec::new();
    let mut skipped = 0usize;
    for shell in 1..=args.nbar_max {
        if matches!(args.coords, Coords::Spherical | Coords::Both) {
            for s in spherical_shell(shell) {
                let e = energy_spherical(p, &s)?;
                levels.push(Level {
                    coords: "spherical",
                    n1: s.n_r,
                    n2: s.n_theta,
                    m: s.m,
                    n_bar: e.n_bar,
                    internal: e.energy_internal,
                    ev: e.energy_ev,
                });
            }
        }
        if matches!(args.coords, Coords::Parabolic | Coords::Both) {
            for (s, m) in parabolic_shell(shell) {
                match energy_parabolic(p, &s, cfg.mode) {
                    Ok(e) => levels.push(Level {
                        coords: "parabolic",
                        n1: s.n,
                        n2: s.n_prime,
                        m,
                        n_bar: e.n_bar,
                        internal: e.energy_internal,
                        ev: e.energy_ev,
                    }),
                    Err(HartmannError::ComplexBeta { .. }) => skipped += 1,
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    levels.sort_by(|a, b| {
        a.internal
            .total_cmp(&b.internal)
            .then_with(|| (a.coords, a.n1, a.n2, a.m).cmp(&(b.coords, b.n1, b.n2, b.m)))
    });

    let mut report = Report::new(vec!["coords", "n1", "n2", "m", "n_bar", "energy_ev", "energy_internal"]);
    report
        .header
        .push("n1,n2 are n_r,n_theta in spherical and n,n' in parabolic coordinates".into());
    for l in &levels {
        report.push(vec![
            Cell::text(l.coords),
            Cell::Int(l.n1 as i64),
            Cell::Int(l.n2 as i64),
            Cell::Int(l.m),
            Cell::Internal(l.n_bar),
            Cell::Ev(l.ev),
            Cell::Internal(l.internal),
        ]);
    }
    let distinct: BTreeSet<String> = levels.iter().map(|l| format!("{:.6}", l.ev)).collect();
    report
        .footer
        .push(format!("{} states, {} distinct energies", levels.len(), distinct.len()));
    if skipped > 0 {
        report
            .footer
            .push(format!("skipped {skipped} parabolic states: beta complex in exact mode"));
    }
    Ok(report)
}

use ringshaped_core::hartmann::table1;

use super::check_nbar_max;
use crate::args::Table1Args;
use crate::golden::{self, TABLE1_TOL_EV};
use crate::{Cell, CliError, Outcome, Report, RunConfig};

/// Degenerate blocks of the hydrogen-like spectrum next to the stored
/// reference energies. Any row off by more than [`TABLE1_TOL_EV`] makes the
/// run fail with a diff.
pub fn cmd_table1(cfg: &RunConfig, args: &Table1Args) -> Result<Outcome, CliError> {
    check_nbar_max(args.nbar_max)?;
    let blocks = table1(&cfg.params, args.nbar_max)?;
    let mut report = Report::new(vec![
        "n_bar",
        "m",
        "n_plus_n_prime",
        "energy_ev",
        "energy_internal",
        "golden_ev",
        "literature_ev",
        "status",
        "note",
    ]);
    let mut diffs = Vec::new();
    for block in &blocks {
        let g = golden::level(block.n_bar);
        for row in &block.rows {
            let (golden_cell, status) = match g {
                Some(g) => {
                    let diff = row.energy_ev - g.energy_ev;
                    let ok = diff.abs() <= TABLE1_TOL_EV;
                    if !ok {
                        diffs.push(format!(
                            "n_bar={} m={} n+n'={}: computed {:.6} golden {:.6} diff {:+.3e}",
                            block.n_bar, row.m, row.n_sum, row.energy_ev, g.energy_ev, diff
                        ));
                    }
                    (Cell::Ev(g.energy_ev), if ok { "ok" } else { "mismatch" })
                }
                None => (Cell::Empty, "unchecked"),
            };
            let (literature, note) = match g.map(|g| g.literature_ev) {
                Some(Some(x)) => (Cell::Fixed(x, 5), ""),
                Some(None) => (Cell::Empty, "no literature value"),
                None => (Cell::Empty, ""),
            };
            report.push(vec![
                Cell::Int(block.n_bar as i64),
                Cell::Int(row.m as i64),
                Cell::Int(row.n_sum as i64),
                Cell::Ev(row.energy_ev),
                Cell::Internal(block.energy_internal),
                golden_cell,
                literature,
                Cell::text(status),
                Cell::text(note),
            ]);
        }
    }
    report.footer.push(format!(
        "{} blocks, {} rows, {} mismatches (tolerance {:.0e} eV)",
        blocks.len(),
        report.rows.len(),
        diffs.len(),
        TABLE1_TOL_EV
    ));
    let failure = (!diffs.is_empty()).then(|| {
        CliError::Mismatch(format!(
            "{} of {} rows differ from the reference table:\n{}",
            diffs.len(),
            report.rows.len(),
            diffs.join("\n")
        ))
    });
    Ok(Outcome { report, failure })
}

use super::check_nbar_max;
use crate::args::VerifyArgs;
use crate::verify::{run_checks, VerifyOptions};
use crate::{Cell, CliError, Outcome, Report, RunConfig};

pub fn cmd_verify(cfg: &RunConfig, args: &VerifyArgs) -> Result<Outcome, CliError> {
    check_nbar_max(args.nbar_max)?;
    let opts = VerifyOptions {
        nbar_max: args.nbar_max,
        grid_points: args.grid_points,
        box_edge: args.box_edge,
    };
    let result = run_checks(&cfg.params, cfg.mode, &opts)?;
    let mut report = Report::new(vec!["check", "passed", "measured", "tolerance", "detail"]);
    for c in &result.checks {
        report.push(vec![
            Cell::text(c.name),
            Cell::Flag(c.passed),
            Cell::Sci(c.measured),
            Cell::Sci(c.tolerance),
            Cell::text(c.detail.clone()),
        ]);
    }
    let failed: Vec<&str> = result.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    report.footer.push(format!(
        "{} checks, {} failed",
        result.checks.len(),
        failed.len()
    ));
    let failure = if let Some(msg) = result.unconverged {
        Some(CliError::Unconverged(format!("oracle did not converge: {msg}")))
    } else if failed.is_empty() {
        None
    } else {
        Some(CliError::Mismatch(format!("failed checks: {}", failed.join(", "))))
    };
    Ok(Outcome { report, failure })
}

//! Command-line front end: spectra, the hydrogen-like level table, grid
//! samples of eigenfunctions and the numerical cross-checks.

pub mod args;
pub mod commands;
pub mod error;
pub mod golden;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use ringshaped_core::hartmann::{BetaMode, PotentialParams};

pub use args::{Cli, Command};
pub use error::CliError;
pub use output::{Cell, Format, Report};

/// Overrides the energy unit in eV.
pub const EPS0_ENV: &str = "RINGSHAPED_EPS0_EV";

/// Everything a command needs, validated.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub params: PotentialParams,
    pub mode: BetaMode,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, eps0_env: Option<&str>) -> Result<Self, CliError> {
        let common = command.common().clone();
        let mut params = PotentialParams::new(common.delta, common.sigma, common.q)?;
        if let Some(raw) = eps0_env {
            let eps0: f64 = raw
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("{EPS0_ENV} must be a number, got '{raw}'")))?;
            params = params.with_eps0(eps0)?;
        }
        // verify reports are meant to be diffed by machines
        let default_format = match command {
            Command::Verify(_) => Format::Json,
            _ => Format::Csv,
        };
        Ok(Self {
            params,
            mode: common.mode.into(),
            format: common.format.unwrap_or(default_format),
            out: common.out,
            command,
        })
    }
}

/// What a command produced. `failure` is set when the output is complete
/// but the run must still exit non-zero.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failure: Option<CliError>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Self { report, failure: None }
    }
}

pub fn dispatch(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Spectrum(a) => commands::spectrum::cmd_spectrum(cfg, a).map(Outcome::from),
        Command::Table1(a) => commands::table1::cmd_table1(cfg, a),
        Command::Verify(a) => commands::verify::cmd_verify(cfg, a),
        Command::Wavefunction(a) => commands::wavefunction::cmd_wavefunction(cfg, a).map(Outcome::from),
    }
}

fn emit(cfg: &RunConfig, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()),
    }
    .map_err(|source| CliError::Io {
        path: cfg.out.as_ref().map_or("stdout".into(), |p| p.display().to_string()),
        source,
    })
}

fn run_config(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let outcome = dispatch(cfg)?;
    let text = outcome
        .report
        .render(cfg.format, cfg.command.name(), &cfg.params, cfg.mode);
    emit(cfg, &text, stdout)?;
    outcome.failure.map_or(Ok(()), Err)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run_from<I, T>(args: I, eps0_env: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 2;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    let result = RunConfig::new(cli.command, eps0_env).and_then(|cfg| run_config(&cfg, stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

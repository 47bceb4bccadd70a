use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ringshaped_core::hartmann::BetaMode;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "ringshaped", version, about = "Bound states of the deformed ring-shaped potential")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Closed-form energy levels.
    Spectrum(SpectrumArgs),
    /// Hydrogen-like level table checked against reference values.
    Table1(Table1Args),
    /// Cross-check closed forms against the numerical oracles.
    Verify(VerifyArgs),
    /// Sample a normalized eigenfunction on a rectangular grid.
    Wavefunction(WavefunctionArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Principal,
}

impl From<ModeArg> for BetaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => BetaMode::Exact,
            ModeArg::Principal => BetaMode::Principal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coords {
    Spherical,
    Parabolic,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Ring (deformation) strength.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub q: f64,
    /// Separation constant used by the parabolic solution.
    #[arg(long, value_enum, default_value_t = ModeArg::Principal)]
    pub mode: ModeArg,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: Common,
    /// Largest principal number `n_r + n_theta + |m| + 1` to list.
    #[arg(long, default_value_t = 3)]
    pub nbar_max: usize,
    #[arg(long, value_enum, default_value_t = Coords::Spherical)]
    pub coords: Coords,
}

#[derive(Debug, Clone, Args)]
pub struct Table1Args {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 6)]
    pub nbar_max: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 4)]
    pub nbar_max: usize,
    /// Radial and angular finite-difference grid size.
    #[arg(long, default_value_t = 2001)]
    pub grid_points: usize,
    /// Radial box edge; by default each state gets a box scaled to its own decay length.
    #[arg(long = "box", allow_negative_numbers = true)]
    pub box_edge: Option<f64>,
}

/// `lo:hi:points`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(format!("expected lo:hi:points, got '{s}'"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("bad number '{t}': {e}"));
        let points = n.trim().parse::<usize>().map_err(|e| format!("bad point count '{n}': {e}"))?;
        Ok(Self {
            lo: num(lo)?,
            hi: num(hi)?,
            points,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WaveCoords {
    Spherical,
    Parabolic,
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = WaveCoords::Spherical)]
    pub coords: WaveCoords,
    /// Radial node count (spherical).
    #[arg(long)]
    pub n_r: Option<usize>,
    /// Angular node count (spherical).
    #[arg(long)]
    pub n_theta: Option<usize>,
    /// First parabolic quantum number.
    #[arg(long)]
    pub n: Option<usize>,
    /// Second parabolic quantum number.
    #[arg(long)]
    pub n_prime: Option<usize>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
    /// First coordinate, `r` or `xi`, as lo:hi:points.
    #[arg(long)]
    pub grid1: Option<Axis>,
    /// Second coordinate, `theta` or `eta`.
    #[arg(long)]
    pub grid2: Option<Axis>,
    /// Azimuth `phi`.
    #[arg(long)]
    pub grid3: Option<Axis>,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Self::Spectrum(a) => &a.common,
            Self::Table1(a) => &a.common,
            Self::Verify(a) => &a.common,
            Self::Wavefunction(a) => &a.common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Spectrum(_) => "spectrum",
            Self::Table1(_) => "table1",
            Self::Verify(_) => "verify",
            Self::Wavefunction(_) => "wavefunction",
        }
    }
}

//! CSV and JSON emitters shared by every command.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use ringshaped_core::hartmann::{BetaMode, PotentialParams};
use serde::Serialize;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One table cell. The variant decides how a number is printed.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Flag(bool),
    /// Energies in eV, six decimals.
    Ev(f64),
    /// Internal units, twelve significant digits.
    Internal(f64),
    /// Measured errors and tolerances.
    Sci(f64),
    /// Coordinates and densities.
    Real(f64),
    /// A value quoted to a given number of decimals.
    Fixed(f64, usize),
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Self::Text(s.into())
    }

    fn number(&self) -> Option<(f64, String)> {
        // adding zero turns −0 into +0
        match self.clone().plus_zero() {
            Self::Ev(x) => Some((x, format!("{x:.6}"))),
            Self::Internal(x) => Some((x, format!("{x:.11e}"))),
            Self::Sci(x) => Some((x, format!("{x:.3e}"))),
            Self::Real(x) => Some((x, format!("{x:.9e}"))),
            Self::Fixed(x, d) => Some((x, format!("{x:.d$}"))),
            _ => None,
        }
    }

    fn plus_zero(self) -> Self {
        match self {
            Self::Ev(x) => Self::Ev(x + 0.0),
            Self::Internal(x) => Self::Internal(x + 0.0),
            Self::Sci(x) => Self::Sci(x + 0.0),
            Self::Real(x) => Self::Real(x + 0.0),
            Self::Fixed(x, d) => Self::Fixed(x + 0.0, d),
            other => other,
        }
    }

    fn csv(&self) -> String {
        match self {
            Self::Text(s) => quote(s),
            Self::Int(i) => i.to_string(),
            Self::Flag(b) => b.to_string(),
            Self::Empty => String::new(),
            other => other.number().map(|(_, s)| s).unwrap_or_default(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Text(s) => Value::String(s.clone()),
            Self::Int(i) => Value::from(*i),
            Self::Flag(b) => Value::Bool(*b),
            Self::Empty => Value::Null,
            other => match other.number() {
                Some((x, s)) if x.is_finite() => Number::from_str(&s).map(Value::Number).unwrap_or(Value::Null),
                _ => Value::Null,
            },
        }
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Serialize)]
struct ParamsMeta {
    delta: f64,
    sigma: f64,
    q: f64,
    eps0_ev: f64,
}

/// Rows plus the comment lines that travel with them.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Printed before the header in CSV, `meta.notes` in JSON.
    pub header: Vec<String>,
    /// Printed after the rows in CSV, `meta.footer` in JSON.
    pub footer: Vec<String>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, command: &str, params: &PotentialParams, mode: BetaMode) -> String {
        match format {
            Format::Csv => self.csv(command, params, mode),
            Format::Json => self.json(command, params, mode),
        }
    }

    fn csv(&self, command: &str, p: &PotentialParams, mode: BetaMode) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# ringshaped {command} {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(
            out,
            "# delta={} sigma={} q={} eps0_ev={} mode={mode}",
            p.delta, p.sigma, p.q, p.eps0_ev
        );
        for line in &self.header {
            let _ = writeln!(out, "# {line}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        for line in &self.footer {
            let _ = writeln!(out, "# {line}");
        }
        out
    }

    fn json(&self, command: &str, p: &PotentialParams, mode: BetaMode) -> String {
        let mut meta = Map::new();
        meta.insert("command".into(), Value::from(command));
        let params = ParamsMeta {
            delta: p.delta,
            sigma: p.sigma,
            q: p.q,
            eps0_ev: p.eps0_ev,
        };
        meta.insert("params".into(), serde_json::to_value(params).unwrap_or(Value::Null));
        meta.insert("mode".into(), Value::from(mode.to_string()));
        meta.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        if !self.header.is_empty() {
            meta.insert("notes".into(), Value::from(self.header.clone()));
        }
        if !self.footer.is_empty() {
            meta.insert("footer".into(), Value::from(self.footer.clone()));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("meta".into(), Value::Object(meta));
        top.insert("rows".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).unwrap_or_default();
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(vec!["name", "energy_ev", "energy_internal"]);
        r.push(vec![Cell::text("a,b"), Cell::Ev(-13.60582), Cell::Internal(-1.0)]);
        r.footer.push("done".into());
        r
    }

    #[test]
    fn csv_layout() {
        let s = sample().render(Format::Csv, "spectrum", &PotentialParams::hydrogen(), BetaMode::Principal);
        let lines: Vec<&str> = s.lines().collect();
        assert!(lines[0].starts_with("# ringshaped spectrum"));
        assert_eq!(lines[2], "name,energy_ev,energy_internal");
        assert_eq!(lines[3], "\"a,b\",-13.605820,-1.00000000000e0");
        assert_eq!(lines[4], "# done");
        assert!(!s.contains('\r'));
    }

    #[test]
    fn negative_zero_prints_as_zero() {
        assert_eq!(Cell::Real(-0.0).csv(), "0.000000000e0");
        assert_eq!(Cell::Ev(-0.0).csv(), "0.000000");
    }

    #[test]
    fn json_keeps_printed_digits() {
        let s = sample().render(Format::Json, "spectrum", &PotentialParams::hydrogen(), BetaMode::Principal);
        assert!(s.contains("\"energy_ev\": -13.605820"), "{s}");
        assert!(s.contains("\"energy_internal\": -1.00000000000e+0"), "{s}");
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["meta"]["mode"], "principal");
        assert_eq!(v["rows"].as_array().unwrap().len(), 1);
        let keys: Vec<&String> = v["meta"].as_object().unwrap().keys().collect();
        assert_eq!(keys[..4], ["command", "params", "mode", "version"]);
    }
}

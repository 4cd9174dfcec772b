//! Shared output plumbing: formats, fixed-precision rendering, and the
//! structured-output envelope.
//!
//! Structured output is JSON with a fixed field layout: maps are
//! emitted with sorted keys, permutations as their canonical comma
//! form, and big integers as decimal strings. Anything that varies
//! between equivalent runs — worker count, cache location, wall time —
//! stays out of it, so byte-identical inputs and budgets give
//! byte-identical documents.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::config::EngineConfig;
use crate::error::Error;

/// How a command should print its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Human-oriented lines and tables.
    #[default]
    Plain,
    /// The machine-readable JSON document.
    Structured,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat, Error> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "structured" => Ok(OutputFormat::Structured),
            other => Err(Error::InvalidArgument(format!(
                "unknown format {other:?}; expected \"plain\" or \"structured\""
            ))),
        }
    }
}

/// Renders a nonnegative big integer in decimal.
pub fn decimal(value: &BigUint) -> String {
    value.to_string()
}

/// Renders `x` with 12 significant digits, the fixed display precision
/// for root and ratio statistics.
pub fn fixed12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.*}", significant_decimals(x))
}

/// Renders an exact rational as `p/q` alongside its 12-digit decimal.
pub fn ratio12(r: &BigRational) -> String {
    let approx = r.to_f64().map(fixed12).unwrap_or_else(|| "overflow".to_string());
    if r.is_integer() {
        format!("{} ({approx})", r.numer())
    } else {
        format!("{}/{} ({approx})", r.numer(), r.denom())
    }
}

fn significant_decimals(x: f64) -> usize {
    let magnitude = x.abs().log10().floor() as i32;
    (11 - magnitude).max(0) as usize
}

/// The top-level structured document: which command ran, under which
/// engine configuration, and what it produced.
#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    config: &'a EngineConfig,
    result: T,
}

/// Serializes a command result into the structured document.
pub fn structured<T: Serialize>(command: &str, config: &EngineConfig, result: T) -> String {
    let envelope = Envelope { command, config, result };
    let mut out = serde_json::to_string_pretty(&envelope).expect("report types always serialize");
    out.push('\n');
    out
}

/// A minimal aligned-column table for plain output.
#[derive(Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    /// A table with the given column headers.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(header: I) -> Table {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    /// Appends one row; it should have as many cells as the header.
    pub fn push<S: Into<String>, I: IntoIterator<Item = S>>(&mut self, row: I) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Renders with every column padded to its widest cell.
    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let write_row = |out: &mut String, cells: &[String]| {
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                let _ = write!(out, "{cell:>w$}");
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        };
        write_row(&mut out, &self.header);
        for row in &self.rows {
            write_row(&mut out, row);
        }
        out
    }
}

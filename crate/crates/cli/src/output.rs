//! Table and report rendering. Output is byte-deterministic: floats print
//! through Rust's shortest round-trip formatting and rows keep the cell
//! order of the request regardless of how the work was scheduled.

use anyhow::{Context, Result};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One line of a projection-norm table (`sweep` and `opnorm`).
#[derive(Debug, Clone, Serialize)]
pub struct NormRow {
    pub n: usize,
    pub p: String,
    #[serde(rename = "norm_P")]
    pub norm_p: f64,
    pub norm_complement: f64,
    pub analytic_inf_value: f64,
    pub method: String,
    pub iterations: usize,
    pub converged: bool,
}

pub const NORM_HEADER: &str = "n,p,norm_P,norm_complement,analytic_inf_value,method,iterations,converged";

impl NormRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.p,
            self.norm_p,
            self.norm_complement,
            self.analytic_inf_value,
            self.method,
            self.iterations,
            self.converged
        )
    }
}

/// One line of a `stack` table.
#[derive(Debug, Clone, Serialize)]
pub struct StackRow {
    pub n: usize,
    pub p: String,
    pub block_norm: f64,
    pub stack_norm: f64,
    pub method: String,
    pub iterations: usize,
    pub converged: bool,
}

pub const STACK_HEADER: &str = "n,p,block_norm,stack_norm,method,iterations,converged";

impl StackRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n, self.p, self.block_norm, self.stack_norm, self.method, self.iterations, self.converged
        )
    }
}

pub fn render_table<R: Serialize>(
    format: Format,
    header: &str,
    rows: &[R],
    csv_line: impl Fn(&R) -> String,
) -> Result<String> {
    match format {
        Format::Csv => {
            let mut out = String::from(header);
            out.push('\n');
            for row in rows {
                out.push_str(&csv_line(row));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(rows)?;
            out.push('\n');
            Ok(out)
        }
    }
}

pub fn render_object<R: Serialize>(format: Format, value: &R) -> Result<String> {
    match format {
        Format::Csv => unreachable!("report commands render csv explicitly"),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(value)?;
            out.push('\n');
            Ok(out)
        }
    }
}

/// Writes to `--out` or standard output.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("--out: cannot write {}", path.display())),
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .context("stdout")?;
            Ok(())
        }
    }
}

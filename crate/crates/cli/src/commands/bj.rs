//! `bj`: Birkhoff-James orthogonality report for a pair of dense vectors.

use anyhow::Result;
use clap::Args;
use lplab_core::{bj_orthogonal, DenseVector};
use serde::Serialize;
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format};

#[derive(Debug, Args)]
pub struct BjArgs {
    /// First vector, comma-separated reals ("2,1").
    pub v: String,
    /// Second vector, same length.
    pub w: String,
    /// Exponent.
    pub p: String,
    /// Relative tolerance for the verdict.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// csv or json; omitted = human-readable text.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct BjOutput {
    p: String,
    norm_v: f64,
    kato_pairing: f64,
    min_lambda: f64,
    min_value: f64,
    orthogonal: bool,
    tolerance: f64,
}

pub const BJ_HEADER: &str = "p,norm_v,kato_pairing,min_lambda,min_value,orthogonal,tolerance";

pub fn run(args: &BjArgs) -> Result<()> {
    let p = args::parse_exponent(&args.p).map_err(|e| anyhow::anyhow!("p: {e}"))?;
    let ve = args::parse_dense(&args.v).map_err(|e| anyhow::anyhow!("v: {e}"))?;
    let we = args::parse_dense(&args.w).map_err(|e| anyhow::anyhow!("w: {e}"))?;
    if args.tol <= 0.0 {
        anyhow::bail!("--tol: must be positive, got {}", args.tol);
    }
    let v = DenseVector::new(ve, p)?;
    let w = DenseVector::new(we, p)?;
    let report = bj_orthogonal(&v, &w, args.tol)?;

    let row = BjOutput {
        p: p.to_string(),
        norm_v: v.norm(),
        kato_pairing: report.kato_pairing,
        min_lambda: report.min_lambda,
        min_value: report.min_value,
        orthogonal: report.orthogonal,
        tolerance: report.tolerance,
    };

    let content = match args.format {
        None => format!(
            "p: {}\n||v||: {}\nkato pairing <w, J(v)>: {}\nminimizer of ||v + t w||: t = {}\nminimum value: {}\northogonal: {}\n",
            row.p, row.norm_v, row.kato_pairing, row.min_lambda, row.min_value, row.orthogonal
        ),
        Some(Format::Csv) => format!(
            "{}\n{},{},{},{},{},{},{}\n",
            BJ_HEADER,
            row.p,
            row.norm_v,
            row.kato_pairing,
            row.min_lambda,
            row.min_value,
            row.orthogonal,
            row.tolerance
        ),
        Some(Format::Json) => output::render_object(Format::Json, &row)?,
    };
    output::emit(&args.out, &content)
}

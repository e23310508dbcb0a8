//! `opial`: closed-form limits for the translated-bump sequence
//! x_n = v + shift(u, n) against its weak limit v and a competitor y.

use anyhow::Result;
use clap::Args;
use lplab_core::{opial_gap, SparseSeq};
use serde::Serialize;
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format};

#[derive(Debug, Args)]
pub struct OpialArgs {
    /// Weak limit v as a sparse literal "index:value,..." ("" = zero).
    pub v: String,
    /// Traveling bump u (must be nonzero).
    pub u: String,
    /// Competitor y (optional, default zero).
    #[arg(default_value = "")]
    pub y: String,
    /// Exponent (finite).
    #[arg(long)]
    pub ps: String,
    /// csv or json; omitted = human-readable text.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct OpialOutput {
    p: String,
    lim_to_weak_limit: f64,
    lim_to_y: f64,
    gap: f64,
    strict: bool,
}

pub const OPIAL_HEADER: &str = "p,lim_to_weak_limit,lim_to_y,gap,strict";

pub fn run(args: &OpialArgs) -> Result<()> {
    let p = args::parse_exponent(&args.ps).map_err(|e| anyhow::anyhow!("--ps: {e}"))?;
    let v = SparseSeq::from_pairs(
        args::parse_sparse(&args.v).map_err(|e| anyhow::anyhow!("v: {e}"))?,
        p,
    )?;
    let u = SparseSeq::from_pairs(
        args::parse_sparse(&args.u).map_err(|e| anyhow::anyhow!("u: {e}"))?,
        p,
    )?;
    let y = SparseSeq::from_pairs(
        args::parse_sparse(&args.y).map_err(|e| anyhow::anyhow!("y: {e}"))?,
        p,
    )?;

    let gap = opial_gap(&v, &u, &y)?;
    let row = OpialOutput {
        p: p.to_string(),
        lim_to_weak_limit: gap.to_weak_limit,
        lim_to_y: gap.to_y,
        gap: gap.gap(),
        strict: gap.is_strict(),
    };

    let content = match args.format {
        None => format!(
            "p: {}\nlim ||x_n - v||: {}\nlim ||x_n - y||: {}\ngap: {}\nstrict: {}\n",
            row.p, row.lim_to_weak_limit, row.lim_to_y, row.gap, row.strict
        ),
        Some(Format::Csv) => format!(
            "{}\n{},{},{},{},{}\n",
            OPIAL_HEADER, row.p, row.lim_to_weak_limit, row.lim_to_y, row.gap, row.strict
        ),
        Some(Format::Json) => output::render_object(Format::Json, &row)?,
    };
    output::emit(&args.out, &content)
}

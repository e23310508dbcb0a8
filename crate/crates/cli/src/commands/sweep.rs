//! `sweep`: projection norms for the regular representations of Z_n over a
//! grid of group sizes and exponents.

use anyhow::Result;
use clap::Args;
use lplab_core::{EstimatorRegistry, Exponent};
use rayon::prelude::*;
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format, NormRow};

use super::{analytic_inf_value, cell_seed, cyclic_projection, MethodChoice};

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Group sizes: comma-separated integers and inclusive ranges (3..10).
    #[arg(long)]
    pub ns: String,
    /// Exponents: comma-separated decimals, 1, or inf.
    #[arg(long)]
    pub ps: String,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    pub method: MethodChoice,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output path (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &SweepArgs) -> Result<()> {
    let ns = args::parse_size_list(&args.ns).map_err(|e| anyhow::anyhow!("--ns: {e}"))?;
    let ps = args::parse_exponent_list(&args.ps).map_err(|e| anyhow::anyhow!("--ps: {e}"))?;

    let cells: Vec<(usize, usize, Exponent)> = ns
        .iter()
        .flat_map(|&n| ps.iter().map(move |&p| (n, p)))
        .enumerate()
        .map(|(i, (n, p))| (i, n, p))
        .collect();

    // Cells run concurrently; collect preserves request order.
    let rows: Vec<NormRow> = cells
        .par_iter()
        .map(|&(index, n, p)| compute_row(n, p, args.method, cell_seed(args.seed, index)))
        .collect::<Result<_>>()?;

    let content = output::render_table(args.format, output::NORM_HEADER, &rows, NormRow::csv)?;
    output::emit(&args.out, &content)
}

pub(super) fn compute_row(
    n: usize,
    p: Exponent,
    method: MethodChoice,
    seed: u64,
) -> Result<NormRow> {
    let pair = cyclic_projection(n, p)?;
    let registry = EstimatorRegistry::with_defaults(seed);
    let p_estimate = method.estimate(&registry, pair.p_invariant())?;
    let c_estimate = method.estimate(&registry, pair.complement())?;
    Ok(NormRow {
        n,
        p: p.to_string(),
        norm_p: p_estimate.lower,
        norm_complement: c_estimate.lower,
        analytic_inf_value: analytic_inf_value(n),
        method: c_estimate.method.to_string(),
        iterations: p_estimate.iterations + c_estimate.iterations,
        converged: p_estimate.converged && c_estimate.converged,
    })
}

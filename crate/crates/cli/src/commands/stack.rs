//! `stack`: the norm of the block p-sum of mean complements over a family
//! of cyclic groups, the finite stage of the residually-finite tower.

use anyhow::Result;
use clap::Args;
use lplab_core::{block_psum_norm, EstimatorRegistry, OperatorMatrix};
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format, StackRow};

use super::{cyclic_projection, MethodChoice};

#[derive(Debug, Args)]
pub struct StackArgs {
    /// Block group sizes: comma-separated integers and inclusive ranges.
    #[arg(long)]
    pub ns: String,
    /// Exponents (one stack per exponent).
    #[arg(long)]
    pub ps: String,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    pub method: MethodChoice,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &StackArgs) -> Result<()> {
    let ns = args::parse_size_list(&args.ns).map_err(|e| anyhow::anyhow!("--ns: {e}"))?;
    let ps = args::parse_exponent_list(&args.ps).map_err(|e| anyhow::anyhow!("--ps: {e}"))?;

    let mut rows: Vec<StackRow> = Vec::new();
    for &p in &ps {
        let blocks: Vec<OperatorMatrix> = ns
            .iter()
            .map(|&n| Ok(cyclic_projection(n, p)?.complement().clone()))
            .collect::<Result<_>>()?;
        let registry = EstimatorRegistry::with_defaults(args.seed);
        // auto follows the registry's selection order; a forced method is
        // honored per block.
        let result = match args.method {
            MethodChoice::Auto => block_psum_norm(&blocks, p, &registry)?,
            _ => {
                let mut estimates = Vec::with_capacity(blocks.len());
                for block in &blocks {
                    estimates.push(args.method.estimate(&registry, block)?);
                }
                let best = estimates
                    .iter()
                    .enumerate()
                    .max_by(|(_, a), (_, b)| a.lower.total_cmp(&b.lower))
                    .map(|(i, _)| i)
                    .expect("nonempty");
                lplab_core::BlockPsumNorm {
                    estimate: estimates[best].clone(),
                    block_estimates: estimates,
                }
            }
        };
        let stack_norm = result.estimate.lower;
        for (&n, est) in ns.iter().zip(&result.block_estimates) {
            rows.push(StackRow {
                n,
                p: p.to_string(),
                block_norm: est.lower,
                stack_norm,
                method: est.method.to_string(),
                iterations: est.iterations,
                converged: est.converged,
            });
        }
    }

    let content = output::render_table(args.format, output::STACK_HEADER, &rows, StackRow::csv)?;
    output::emit(&args.out, &content)
}

//! `opnorm`: projection norms for one group, given as a Cayley-table file
//! or as cyclic group sizes.

use anyhow::{anyhow, Result};
use clap::Args;
use lplab_core::{EstimatorRegistry, Exponent, FiniteGroup, SignedPermRep};
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format, NormRow};

use super::{analytic_inf_value, cell_seed, MethodChoice};

#[derive(Debug, Args)]
pub struct OpnormArgs {
    /// Cyclic group sizes (alternative to --group-file).
    #[arg(long)]
    pub ns: Option<String>,
    /// Cayley table file: first line the order n, then n rows of n indices.
    #[arg(long)]
    pub group_file: Option<PathBuf>,
    /// Exponents.
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

pub fn run(args: &OpnormArgs) -> Result<()> {
    let ps = args::parse_exponent_list(&args.ps).map_err(|e| anyhow!("--ps: {e}"))?;

    let groups: Vec<FiniteGroup> = match (&args.ns, &args.group_file) {
        (Some(ns), None) => args::parse_size_list(ns)
            .map_err(|e| anyhow!("--ns: {e}"))?
            .into_iter()
            .map(|n| FiniteGroup::cyclic(n).map_err(|e| anyhow!("--ns: {e}")))
            .collect::<Result<_>>()?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| anyhow!("--group-file: cannot read {}: {e}", path.display()))?;
            vec![FiniteGroup::from_cayley_text(&text).map_err(|e| anyhow!("--group-file: {e}"))?]
        }
        _ => anyhow::bail!("exactly one of --ns or --group-file is required"),
    };

    let mut rows = Vec::new();
    for (gi, group) in groups.iter().enumerate() {
        for (pi, &p) in ps.iter().enumerate() {
            let index = gi * ps.len() + pi;
            rows.push(group_row(group, p, args.method, cell_seed(args.seed, index))?);
        }
    }

    let content = output::render_table(args.format, output::NORM_HEADER, &rows, NormRow::csv)?;
    output::emit(&args.out, &content)
}

fn group_row(
    group: &FiniteGroup,
    p: Exponent,
    method: MethodChoice,
    seed: u64,
) -> Result<NormRow> {
    let rep = SignedPermRep::regular(group, p);
    let pair = rep.invariant_projection()?;
    let registry = EstimatorRegistry::with_defaults(seed);
    let p_estimate = method.estimate(&registry, pair.p_invariant())?;
    let c_estimate = method.estimate(&registry, pair.complement())?;
    Ok(NormRow {
        n: group.order(),
        p: p.to_string(),
        norm_p: p_estimate.lower,
        norm_complement: c_estimate.lower,
        analytic_inf_value: analytic_inf_value(group.order()),
        method: c_estimate.method.to_string(),
        iterations: p_estimate.iterations + c_estimate.iterations,
        converged: p_estimate.converged && c_estimate.converged,
    })
}

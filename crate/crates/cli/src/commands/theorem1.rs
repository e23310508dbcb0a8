//! `theorem1`: runs the shift-model orthogonality certificate on a seeded
//! random instance and exits nonzero if any of its assertions fails.

use anyhow::Result;
use clap::Args;
use lplab_core::util::{splitmix64, uniform01};
use lplab_core::{ShiftModel, SparseSeq};
use serde::Serialize;
use std::path::PathBuf;

use crate::args;
use crate::output::{self, Format};

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// Exponent, strictly between 1 and infinity.
    #[arg(long)]
    pub ps: String,
    /// Dimension of the invariant factor.
    #[arg(long, default_value_t = 1)]
    pub trivial_dim: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Group elements 1..=gmax are tested in both directions.
    #[arg(long, default_value_t = 20)]
    pub gmax: i64,
    /// csv or json; omitted = human-readable text.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct TheoremOutput {
    p: String,
    trivial_dim: usize,
    seed: u64,
    g: Vec<i64>,
    pairing_forward: Vec<f64>,
    pairing_backward: Vec<f64>,
    kato_pairing: f64,
    min_lambda: f64,
    min_value: f64,
    norm_v: f64,
    orthogonal: bool,
    complement_norm: f64,
    complement_converged: bool,
    passed: bool,
}

pub const THEOREM_HEADER: &str =
    "g,pairing_forward,pairing_backward,orthogonal,complement_norm,passed";

/// Seeded sparse vector: 1-5 support points in [-8, 8] with magnitudes in
/// [0.25, 2), plus a nonzero fixed part.
fn random_instance(
    model: &ShiftModel,
    seed: u64,
) -> Result<(lplab_core::ModelVector, lplab_core::ModelVector)> {
    let mut state = seed;
    let support_size = 1 + (splitmix64(&mut state) % 5) as usize;
    let mut pairs = Vec::with_capacity(support_size);
    for _ in 0..support_size {
        let index = (splitmix64(&mut state) % 17) as i64 - 8;
        let magnitude = 0.25 + 1.75 * uniform01(&mut state);
        let sign = if splitmix64(&mut state) % 2 == 0 { 1.0 } else { -1.0 };
        pairs.push((index, sign * magnitude));
    }
    let mut seq = SparseSeq::from_pairs(pairs, model.ambient())?;
    if seq.is_zero() {
        // colliding indices can cancel; fall back to a bump
        seq = SparseSeq::delta((splitmix64(&mut state) % 17) as i64 - 8, model.ambient());
    }
    let fixed: Vec<f64> = (0..model.trivial_dim())
        .map(|_| {
            let magnitude = 0.25 + 1.75 * uniform01(&mut state);
            let sign = if splitmix64(&mut state) % 2 == 0 { 1.0 } else { -1.0 };
            sign * magnitude
        })
        .collect();
    Ok((model.seq_vector(seq)?, model.fixed_vector(fixed)?))
}

pub fn run(args: &TheoremArgs) -> Result<()> {
    let p = args::parse_exponent(&args.ps).map_err(|e| anyhow::anyhow!("--ps: {e}"))?;
    if !p.is_smooth() {
        anyhow::bail!("--ps: the certificate needs p strictly between 1 and infinity");
    }
    if args.trivial_dim == 0 {
        anyhow::bail!("--trivial-dim: must be at least 1");
    }
    if args.gmax < 1 {
        anyhow::bail!("--gmax: must be at least 1");
    }

    let model = ShiftModel::new(args.trivial_dim, p);
    let (v, w) = random_instance(&model, args.seed)?;
    let g_list: Vec<i64> = (1..=args.gmax).collect();
    let report = model.orthogonality_certificate(&v, &w, &g_list)?;

    let row = TheoremOutput {
        p: p.to_string(),
        trivial_dim: args.trivial_dim,
        seed: args.seed,
        g: g_list.clone(),
        pairing_forward: report.pairings_forward.clone(),
        pairing_backward: report.pairings_backward.clone(),
        kato_pairing: report.kato_pairing,
        min_lambda: report.min_lambda,
        min_value: report.min_value,
        norm_v: model.norm(&v),
        orthogonal: report.orthogonal,
        complement_norm: report.complement_norm,
        complement_converged: report.complement_converged,
        passed: report.passed,
    };

    let content = match args.format {
        None => {
            let mut text = format!(
                "p: {}\ntrivial_dim: {}\nseed: {}\n",
                row.p, row.trivial_dim, row.seed
            );
            text.push_str("g, <w, J(shift(v,-g))>, <w, J(shift(v,+g))>:\n");
            for (i, g) in g_list.iter().enumerate() {
                text.push_str(&format!(
                    "  {g}: {} {}\n",
                    row.pairing_forward[i], row.pairing_backward[i]
                ));
            }
            text.push_str(&format!(
                "||v||: {}\nmin ||v + t w||: {} at t = {}\northogonal: {}\ntruncated ||I - P||: {}\npassed: {}\n",
                row.norm_v,
                row.min_value,
                row.min_lambda,
                row.orthogonal,
                row.complement_norm,
                row.passed
            ));
            text
        }
        Some(Format::Csv) => {
            let mut text = String::from(THEOREM_HEADER);
            text.push('\n');
            for (i, g) in g_list.iter().enumerate() {
                text.push_str(&format!(
                    "{g},{},{},{},{},{}\n",
                    row.pairing_forward[i],
                    row.pairing_backward[i],
                    row.orthogonal,
                    row.complement_norm,
                    row.passed
                ));
            }
            text
        }
        Some(Format::Json) => output::render_object(Format::Json, &row)?,
    };
    output::emit(&args.out, &content)?;

    if !report.passed {
        // name the first failing quantity
        if let Some(i) = report
            .pairings_forward
            .iter()
            .chain(&report.pairings_backward)
            .position(|&c| c != 0.0)
        {
            anyhow::bail!(
                "theorem1: dual pairing #{i} is {} (expected exactly 0)",
                report
                    .pairings_forward
                    .iter()
                    .chain(&report.pairings_backward)
                    .nth(i)
                    .unwrap()
            );
        }
        if !report.orthogonal {
            anyhow::bail!(
                "theorem1: min ||v + t w|| = {} fell below ||v|| = {}",
                report.min_value,
                model.norm(&v)
            );
        }
        anyhow::bail!(
            "theorem1: truncated complement norm {} (converged: {}) is not 1",
            report.complement_norm,
            report.complement_converged
        );
    }
    Ok(())
}

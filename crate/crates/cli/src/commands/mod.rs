pub mod bj;
pub mod opial;
pub mod opnorm;
pub mod stack;
pub mod sweep;
pub mod theorem1;

use anyhow::{anyhow, Result};
use lplab_core::{EstimatorRegistry, Exponent, NormEstimate, OperatorMatrix, ProjectionPair, SignedPermRep};

/// Which estimator a table command runs. `Auto` picks exact formulas at
/// p in {1, 2, inf}, brute force for dimension <= 4, power iteration
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Auto,
    Exact,
    Power,
    Brute,
}

impl MethodChoice {
    pub fn estimate(
        self,
        registry: &EstimatorRegistry,
        a: &OperatorMatrix,
    ) -> Result<NormEstimate> {
        let result = match self {
            MethodChoice::Auto => registry.auto(a),
            MethodChoice::Exact => registry.estimate_with("exact", a),
            MethodChoice::Power => registry.estimate_with("power", a),
            MethodChoice::Brute => registry.estimate_with("brute", a),
        };
        result.map_err(|e| anyhow!("--method: {e}"))
    }
}

/// Deterministic per-cell seed, independent of scheduling order.
pub fn cell_seed(seed: u64, index: usize) -> u64 {
    let mut state = seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    lplab_core::util::splitmix64(&mut state)
}

/// The regular representation of Z_n and its projection pair at p.
pub fn cyclic_projection(n: usize, p: Exponent) -> Result<ProjectionPair> {
    let group = lplab_core::FiniteGroup::cyclic(n).map_err(|e| anyhow!("--ns: {e}"))?;
    let rep = SignedPermRep::regular(&group, p);
    rep.invariant_projection().map_err(|e| anyhow!("{e}"))
}

/// The mean complement reaches 2 - 2/n at p = infinity on any group of
/// order n; emitted as the analytic comparison column.
pub fn analytic_inf_value(n: usize) -> f64 {
    2.0 - 2.0 / n as f64
}

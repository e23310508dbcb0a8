//! Operator p->p norm estimation.
//!
//! Computing the p->p norm of a matrix is NP-hard in general, so this module
//! keeps a family of interchangeable estimators behind one trait:
//!
//! * [`ExactFormula`] — closed forms at p = 1 (max column sum), p = infinity
//!   (max row sum), and p = 2 (largest singular value by power iteration on
//!   A^T A);
//! * [`PowerIteration`] — dual-map power iteration for general p in
//!   (1, infinity), a certified lower-bound method;
//! * [`BruteForce`] — deterministic sphere sampling plus local refinement
//!   for dimension <= 4, the ground-truth oracle the iterative method is
//!   checked against.
//!
//! Estimators register by name in an [`EstimatorRegistry`] and are selected
//! at runtime; `auto` picks exact formulas when they exist, brute force in
//! small dimension, and the power method otherwise. Every estimate carries
//! a witness vector certifying it as a lower bound.

mod brute;
mod exact;
mod power;
mod registry;

pub use registry::{BruteForce, EstimatorRegistry, ExactFormula, NormEstimator, PowerIteration};

use crate::dense::DenseVector;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::operator::OperatorMatrix;

/// Which routine produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact1,
    Exact2,
    ExactInf,
    Power,
    Brute,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Exact1 => "exact_1",
            Method::Exact2 => "exact_2",
            Method::ExactInf => "exact_inf",
            Method::Power => "power",
            Method::Brute => "brute",
        };
        f.write_str(s)
    }
}

/// A certified lower bound on the operator norm: the witness satisfies
/// ||A w|| / ||w|| = lower up to rounding.
#[derive(Debug, Clone)]
pub struct NormEstimate {
    pub lower: f64,
    pub witness: DenseVector,
    pub method: Method,
    pub iterations: usize,
    pub converged: bool,
}

impl NormEstimate {
    /// Re-evaluates the witness against the operator; tests compare this
    /// against `lower`.
    pub fn witness_ratio(&self, a: &OperatorMatrix) -> Result<f64> {
        let image = a.apply(&self.witness)?;
        let nw = self.witness.norm();
        if nw == 0.0 {
            return Err(Error::ZeroVector { role: "witness" });
        }
        Ok(image.norm() / nw)
    }
}

/// Closed-form norm at p in {1, 2, inf}; errors for other exponents.
pub fn opnorm_exact(a: &OperatorMatrix) -> Result<NormEstimate> {
    exact::estimate(a)
}

/// Dual-map power iteration for p in (1, inf): best of 8 seeded restarts
/// from the all-ones direction, each run's estimate nondecreasing.
pub fn opnorm_power(a: &OperatorMatrix, seed: u64, max_iter: usize) -> Result<NormEstimate> {
    power::estimate(a, seed, max_iter, power::DEFAULT_RESTARTS)
}

/// Deterministic global search for dimension <= 4: grid over the faces of
/// the unit cube followed by coordinate refinement.
pub fn opnorm_brute(a: &OperatorMatrix, resolution: usize) -> Result<NormEstimate> {
    brute::estimate(a, resolution)
}

/// Norm of a block-diagonal operator on the p-sum of the block spaces,
/// together with the per-block estimates. Equals the largest block norm;
/// the witness is the maximizing block's witness, embedded.
#[derive(Debug, Clone)]
pub struct BlockPsumNorm {
    pub estimate: NormEstimate,
    pub block_estimates: Vec<NormEstimate>,
}

pub fn block_psum_norm(
    blocks: &[OperatorMatrix],
    p: Exponent,
    registry: &EstimatorRegistry,
) -> Result<BlockPsumNorm> {
    if blocks.is_empty() {
        return Err(Error::EmptyList { what: "block list" });
    }
    let mut block_estimates = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.ambient() != p {
            return Err(Error::MixedExponents);
        }
        block_estimates.push(registry.auto(block)?);
    }

    let best = block_estimates
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.lower.total_cmp(&b.lower))
        .map(|(i, _)| i)
        .expect("nonempty");

    let total: usize = blocks.iter().map(|b| b.dim()).sum();
    let offset: usize = blocks[..best].iter().map(|b| b.dim()).sum();
    let mut entries = vec![0.0; total];
    let witness = &block_estimates[best].witness;
    entries[offset..offset + witness.dim()].copy_from_slice(witness.entries());

    let estimate = NormEstimate {
        lower: block_estimates[best].lower,
        witness: DenseVector::new(entries, p)?,
        method: block_estimates[best].method,
        iterations: block_estimates.iter().map(|e| e.iterations).sum(),
        converged: block_estimates.iter().all(|e| e.converged),
    };
    Ok(BlockPsumNorm {
        estimate,
        block_estimates,
    })
}

/// Outcome of checking whether an operator is a bicontractive projection.
#[derive(Debug, Clone)]
pub struct BicontractiveReport {
    /// ||P^2 - P|| entrywise <= 1e-9.
    pub is_projection: bool,
    pub projection_norm: f64,
    pub complement_norm: f64,
    /// A projection with both norms <= 1 + 1e-6.
    pub bicontractive: bool,
}

pub fn bicontractive_check(
    p_matrix: &OperatorMatrix,
    registry: &EstimatorRegistry,
) -> Result<BicontractiveReport> {
    let squared = p_matrix.matmul(p_matrix)?;
    let is_projection = squared.max_abs_diff(p_matrix)? <= 1e-9;
    let projection_norm = registry.auto(p_matrix)?.lower;
    let complement = OperatorMatrix::identity(p_matrix.dim(), p_matrix.ambient())?.sub(p_matrix)?;
    let complement_norm = registry.auto(&complement)?.lower;
    let slack = 1.0 + 1e-6;
    Ok(BicontractiveReport {
        is_projection,
        projection_norm,
        complement_norm,
        bicontractive: is_projection && projection_norm <= slack && complement_norm <= slack,
    })
}

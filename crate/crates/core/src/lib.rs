//! Finite-dimensional lp geometry at desk scale: norms and duality mappings
//! on lp^n and lp(Z), Birkhoff-James orthogonality with cross-validating
//! routes, finite-group representations by signed permutations with their
//! invariant projections, a registry of operator p-norm estimators, and a
//! shift-action testbed where weak-limit statements become exact finite
//! identities.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so all types are safe to share across threads. Floating-point
//! reductions run in sorted or otherwise fixed orders, which makes results
//! deterministic and makes permutation invariance of the norm bit-exact.

pub mod dense;
pub mod error;
pub mod exponent;
pub mod groups;
pub mod norms;
pub mod operator;
pub mod opnorm;
pub mod orthogonality;
pub mod shift;
pub mod sparse;
pub mod util;

pub use dense::{psum_embed, DenseVector, PsumVector};
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use groups::{
    duality_equivariance_residual, FiniteGroup, ProjectionPair, SignedPermRep, SignedPermutation,
};
pub use operator::OperatorMatrix;
pub use opnorm::{
    bicontractive_check, block_psum_norm, opnorm_brute, opnorm_exact, opnorm_power,
    BicontractiveReport, BlockPsumNorm, BruteForce, EstimatorRegistry, ExactFormula, Method,
    NormEstimate, NormEstimator, PowerIteration,
};
pub use orthogonality::{bj_minimize, bj_orthogonal, golden_section_minimize, kato_pairing, BjReport};
pub use shift::{
    delta_convergence_check, opial_gap, CertificateReport, ModelVector, OpialGap, ShiftModel,
    WotReport,
};
pub use sparse::SparseSeq;

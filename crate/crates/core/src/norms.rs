//! Entry-level norm and duality-map arithmetic shared by the dense, sparse,
//! and mixed-model vector types.
//!
//! Finite-p norms rescale by the largest magnitude before raising to the
//! power p (so no intermediate overflows for any supported p) and sum the
//! powered terms in sorted order. Sorted summation makes the result
//! independent of entry order, which turns "signed permutations are
//! isometries" into a bit-exact identity rather than an approximate one.

use crate::exponent::Exponent;

/// The lp norm of the values produced by `iter`.
pub fn lp_norm(iter: impl Iterator<Item = f64>, p: Exponent) -> f64 {
    let mags: Vec<f64> = iter.map(f64::abs).collect();
    if p.is_inf() {
        return mags.iter().fold(0.0, |acc, &m| acc.max(m));
    }
    let top = mags.iter().fold(0.0, |acc: f64, &m| acc.max(m));
    if top == 0.0 {
        return 0.0;
    }
    if p.is_one() {
        return sorted_sum(mags.into_iter());
    }
    let pv = p.finite_value().expect("finite exponent");
    let sum = sorted_sum(mags.into_iter().map(|m| (m / top).powf(pv)));
    top * sum.powf(1.0 / pv)
}

/// Sum in ascending order; deterministic under any reordering of the input.
fn sorted_sum(iter: impl Iterator<Item = f64>) -> f64 {
    let mut terms: Vec<f64> = iter.collect();
    terms.sort_by(f64::total_cmp);
    terms.iter().sum()
}

/// One entry of the duality map image: with nv = ||v||_p,
/// J(v)_i = nv * (|v_i|/nv)^(p-1) * sign(v_i).
///
/// The ratio form keeps every factor in [0, nv] for any p, and sends the
/// zero vector to zero before the power could see a 0^negative.
pub fn dual_map_entry(x: f64, norm_v: f64, p: f64) -> f64 {
    if x == 0.0 || norm_v == 0.0 {
        return 0.0;
    }
    let magnitude = norm_v * (x.abs() / norm_v).powf(p - 1.0);
    if x < 0.0 {
        -magnitude
    } else {
        magnitude
    }
}

/// Norm of a disjoint p-sum given the block norms: the lp combination of
/// the block norms themselves (max for p = infinity).
pub fn psum_combine(block_norms: impl Iterator<Item = f64>, p: Exponent) -> f64 {
    lp_norm(block_norms, p)
}

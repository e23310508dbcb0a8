//! Dual-map power iteration for the p->p norm, p in (1, infinity).
//!
//! One step maps x to the normalized inverse dual image of A^T J_p(A x);
//! the estimate ||A x_k||_p is nondecreasing along a run, and every iterate
//! certifies itself as a lower bound. The iteration converges to a critical
//! point of the norm ratio, not always the global one, so several runs are
//! taken and the best wins: the all-ones direction, a continuation start
//! that tracks the maximizer from p = 2 through intermediate exponents
//! (the maximizer moves continuously in p, so short steps keep the iterate
//! in the global basin), and seeded perturbations of all-ones.

use crate::dense::DenseVector;
use crate::error::Result;
use crate::norms;
use crate::operator::OperatorMatrix;
use crate::util;

use super::{Method, NormEstimate};

pub(super) const DEFAULT_RESTARTS: usize = 8;
/// Perturbation half-width around the all-ones start; wide enough to flip
/// signs, which matters for p far from 2.
const PERTURBATION: f64 = 3.0;
const REL_TOL: f64 = 1e-12;
/// Step ratio for the continuation path, geometric in p - 1.
const CONTINUATION_RATIO: f64 = 1.5;

struct Run {
    estimate: f64,
    witness: Vec<f64>,
    iterations: usize,
    converged: bool,
}

/// One full iteration run at exponent `p` from the direction `start`.
fn run(a: &OperatorMatrix, at: &OperatorMatrix, p: f64, q: f64, start: &[f64], max_iter: usize) -> Run {
    let mut x = start.to_vec();
    let nx = lp(&x, p);
    let mut out = Run {
        estimate: 0.0,
        witness: x.clone(),
        iterations: 0,
        converged: false,
    };
    if nx == 0.0 {
        out.converged = true;
        return out;
    }
    x.iter_mut().for_each(|v| *v /= nx);
    out.witness = x.clone();

    for _ in 0..max_iter {
        out.iterations += 1;
        let y = a.apply_slice(&x);
        let e = lp(&y, p);
        if e <= out.estimate * (1.0 + REL_TOL) {
            out.converged = true;
            break;
        }
        out.estimate = e;
        out.witness = x.clone();

        // x <- normalize( J_q( A^T J_p(A x) ) )
        let w: Vec<f64> = y.iter().map(|&v| norms::dual_map_entry(v, e, p)).collect();
        let u = at.apply_slice(&w);
        let nu = lp(&u, q);
        let mut z: Vec<f64> = u.iter().map(|&v| norms::dual_map_entry(v, nu, q)).collect();
        let nz = lp(&z, p);
        if nz == 0.0 {
            out.converged = true;
            break;
        }
        z.iter_mut().for_each(|v| *v /= nz);
        x = z;
    }
    out
}

/// Follows the maximizer from the l2 witness to the target exponent in
/// geometric steps of p - 1. Returns the arrival direction.
fn continuation_start(
    a: &OperatorMatrix,
    at: &OperatorMatrix,
    p_target: f64,
    iterations: &mut usize,
) -> Option<Vec<f64>> {
    let spectral = super::exact::estimate(&a.with_ambient(crate::exponent::Exponent::TWO)).ok()?;
    let mut x = spectral.witness.entries().to_vec();
    if lp(&x, 2.0) == 0.0 {
        return None;
    }
    let mut p_cur = 2.0f64;
    loop {
        p_cur = if p_target > 2.0 {
            (1.0 + (p_cur - 1.0) * CONTINUATION_RATIO).min(p_target)
        } else {
            (1.0 + (p_cur - 1.0) / CONTINUATION_RATIO).max(p_target)
        };
        let q_cur = p_cur / (p_cur - 1.0);
        let step = run(a, at, p_cur, q_cur, &x, 500);
        *iterations += step.iterations;
        if lp(&step.witness, p_cur) == 0.0 {
            return None;
        }
        x = step.witness;
        if p_cur == p_target {
            return Some(x);
        }
    }
}

pub(super) fn estimate(
    a: &OperatorMatrix,
    seed: u64,
    max_iter: usize,
    restarts: usize,
) -> Result<NormEstimate> {
    let p = a.ambient().require_smooth()?;
    let q = a.ambient().dual_value().expect("smooth exponents are finite");
    let n = a.dim();
    let at = a.transpose();
    let max_iter = max_iter.max(1);

    let mut state = seed;
    let mut iterations = 0usize;
    let mut best: Option<Run> = None;

    for restart in 0..restarts.max(1) {
        let start: Vec<f64> = if restart == 0 {
            vec![1.0; n]
        } else if restart == 1 {
            match continuation_start(a, &at, p, &mut iterations) {
                Some(x) => x,
                None => vec![1.0; n],
            }
        } else {
            (0..n)
                .map(|_| 1.0 + PERTURBATION * (2.0 * util::uniform01(&mut state) - 1.0))
                .collect()
        };
        let outcome = run(a, &at, p, q, &start, max_iter);
        iterations += outcome.iterations;
        if best.as_ref().is_none_or(|b| outcome.estimate > b.estimate) {
            best = Some(outcome);
        }
    }

    let best = best.expect("at least one restart");
    Ok(NormEstimate {
        lower: best.estimate,
        witness: DenseVector::new(best.witness, a.ambient())?,
        method: Method::Power,
        iterations,
        converged: best.converged,
    })
}

fn lp(x: &[f64], p: f64) -> f64 {
    norms::lp_norm(
        x.iter().copied(),
        crate::exponent::Exponent::finite(p).expect("validated"),
    )
}

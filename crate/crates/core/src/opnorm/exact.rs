//! Closed-form operator norms at the three classical exponents.

use crate::dense::DenseVector;
use crate::error::{Error, Result};
use crate::norms;
use crate::operator::OperatorMatrix;
use crate::util;

use super::{Method, NormEstimate};

pub(crate) fn estimate(a: &OperatorMatrix) -> Result<NormEstimate> {
    let p = a.ambient();
    if p.is_one() {
        Ok(column_sums(a))
    } else if p.is_inf() {
        Ok(row_sums(a))
    } else if p.is_two() {
        Ok(spectral(a))
    } else {
        Err(Error::NoExactFormula(p.to_string()))
    }
}

/// p = 1: the norm is the largest column absolute sum, attained at a basis
/// vector.
fn column_sums(a: &OperatorMatrix) -> NormEstimate {
    let n = a.dim();
    let (mut best, mut best_col) = (f64::NEG_INFINITY, 0);
    for j in 0..n {
        let sum = norms::lp_norm((0..n).map(|i| a.entry(i, j)), crate::exponent::Exponent::ONE);
        if sum > best {
            best = sum;
            best_col = j;
        }
    }
    NormEstimate {
        lower: best,
        witness: DenseVector::basis(n, best_col, a.ambient()).expect("valid index"),
        method: Method::Exact1,
        iterations: 1,
        converged: true,
    }
}

/// p = infinity: the largest row absolute sum, attained at the sign pattern
/// of that row.
fn row_sums(a: &OperatorMatrix) -> NormEstimate {
    let n = a.dim();
    let (mut best, mut best_row) = (f64::NEG_INFINITY, 0);
    for i in 0..n {
        let sum = norms::lp_norm(a.row(i).iter().copied(), crate::exponent::Exponent::ONE);
        if sum > best {
            best = sum;
            best_row = i;
        }
    }
    let witness: Vec<f64> = a
        .row(best_row)
        .iter()
        .map(|&x| if x < 0.0 { -1.0 } else { 1.0 })
        .collect();
    NormEstimate {
        lower: best,
        witness: DenseVector::new(witness, a.ambient()).expect("n >= 1"),
        method: Method::ExactInf,
        iterations: 1,
        converged: true,
    }
}

/// p = 2: largest singular value via power iteration on A^T A, run from a
/// fixed spread of deterministic starts so a start orthogonal to the top
/// singular vector cannot silently stall the whole computation.
fn spectral(a: &OperatorMatrix) -> NormEstimate {
    let n = a.dim();
    let at = a.transpose();
    let two = crate::exponent::Exponent::TWO;

    let mut starts: Vec<Vec<f64>> = vec![
        vec![1.0; n],
        (0..n).map(|i| 1.0 + i as f64).collect(),
        (0..n)
            .map(|i| if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect(),
    ];
    let mut state = 0x5EEDu64;
    for _ in 0..2 {
        starts.push((0..n).map(|_| 2.0 * util::uniform01(&mut state) - 1.0).collect());
    }

    let mut best = 0.0f64;
    let mut best_x = starts[0].clone();
    let mut best_converged = false;
    let mut iterations = 0usize;

    for start in starts {
        let mut x = start;
        let nx = norms::lp_norm(x.iter().copied(), two);
        if nx == 0.0 {
            continue;
        }
        x.iter_mut().for_each(|v| *v /= nx);

        let mut prev = -1.0f64;
        let mut converged = false;
        for _ in 0..2500 {
            iterations += 1;
            let image = a.apply_slice(&x);
            let e = norms::lp_norm(image.iter().copied(), two);
            if e > best {
                best = e;
                best_x = x.clone();
                best_converged = false;
            }
            if prev >= 0.0 && (e - prev).abs() <= 1e-12 * e.max(1e-300) {
                converged = true;
                break;
            }
            prev = e;
            let mut y = at.apply_slice(&image);
            let ny = norms::lp_norm(y.iter().copied(), two);
            if ny == 0.0 {
                converged = true;
                break;
            }
            y.iter_mut().for_each(|v| *v /= ny);
            x = y;
        }
        if converged && (norms::lp_norm(a.apply_slice(&x).into_iter(), two) >= best - 1e-12 * best)
        {
            best_converged = true;
        }
    }

    NormEstimate {
        lower: best,
        witness: DenseVector::new(best_x, a.ambient()).expect("n >= 1"),
        method: Method::Exact2,
        iterations,
        converged: best_converged,
    }
}

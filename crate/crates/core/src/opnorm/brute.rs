//! Deterministic global search for the p->p norm in dimension <= 4.
//!
//! The norm ratio is scale-invariant, so the sphere is swept through the
//! faces of the unit cube: on each face one coordinate is pinned to 1 and
//! the others run over a uniform grid in [-1, 1] (by symmetry x and -x give
//! the same ratio, so the faces at -1 are not needed). The best grid points
//! are then polished by per-coordinate golden-section refinement. This is
//! the ground-truth oracle the power method is validated against.

use crate::dense::DenseVector;
use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::orthogonality::golden_section_minimize;

use super::{Method, NormEstimate};

const REFINE_STARTS: usize = 8;
const REFINE_SWEEPS: usize = 40;
const REFINE_EVALS: usize = 48;

pub(super) fn estimate(a: &OperatorMatrix, resolution: usize) -> Result<NormEstimate> {
    let n = a.dim();
    if n > 4 {
        return Err(Error::DimensionTooLarge(n));
    }
    // An odd grid size keeps 0 and both endpoints among the samples.
    let res = resolution.max(3) | 1;

    let mut evals = 0usize;
    let mut ratio = |x: &[f64]| -> f64 {
        evals += 1;
        let nx = crate::norms::lp_norm(x.iter().copied(), a.ambient());
        if nx == 0.0 {
            return 0.0;
        }
        crate::norms::lp_norm(a.apply_slice(x).into_iter(), a.ambient()) / nx
    };

    if n == 1 {
        let witness = DenseVector::new(vec![1.0], a.ambient())?;
        return Ok(NormEstimate {
            lower: a.entry(0, 0).abs(),
            witness,
            method: Method::Brute,
            iterations: 1,
            converged: true,
        });
    }

    let grid: Vec<f64> = (0..res)
        .map(|i| -1.0 + 2.0 * i as f64 / (res - 1) as f64)
        .collect();

    // Top starting points for refinement, kept sorted by value descending.
    let mut starts: Vec<(f64, Vec<f64>, usize)> = Vec::new();
    let mut push_start = |value: f64, x: &[f64], face: usize| {
        if starts.len() < REFINE_STARTS {
            starts.push((value, x.to_vec(), face));
            starts.sort_by(|a, b| b.0.total_cmp(&a.0));
        } else if value > starts.last().unwrap().0 {
            starts.pop();
            starts.push((value, x.to_vec(), face));
            starts.sort_by(|a, b| b.0.total_cmp(&a.0));
        }
    };

    let free = n - 1;
    let mut x = vec![0.0; n];
    for face in 0..n {
        let mut digits = vec![0usize; free];
        loop {
            x[face] = 1.0;
            let mut d = 0;
            for j in 0..n {
                if j != face {
                    x[j] = grid[digits[d]];
                    d += 1;
                }
            }
            let value = ratio(&x);
            push_start(value, &x, face);

            // odometer over the free coordinates
            let mut carry = 0;
            loop {
                if carry == free {
                    break;
                }
                digits[carry] += 1;
                if digits[carry] < res {
                    break;
                }
                digits[carry] = 0;
                carry += 1;
            }
            if carry == free {
                break;
            }
        }
    }

    let spacing = 2.0 / (res - 1) as f64;
    let mut best = (0.0f64, vec![1.0; n]);
    for (value, start, face) in starts {
        let (v, x) = refine(&mut ratio, start, value, spacing, face);
        if v > best.0 {
            best = (v, x);
        }
    }

    Ok(NormEstimate {
        lower: best.0,
        witness: DenseVector::new(best.1, a.ambient())?,
        method: Method::Brute,
        iterations: evals,
        converged: true,
    })
}

/// Pattern-search ascent in a shrinking window: golden-section line
/// searches along the free coordinate axes and their pairwise diagonals
/// (the diagonals keep the search from stalling on ridges). The face
/// coordinate stays pinned; the optimum normalized to its own face keeps
/// every free coordinate inside [-1, 1].
fn refine(
    ratio: &mut impl FnMut(&[f64]) -> f64,
    mut x: Vec<f64>,
    mut value: f64,
    spacing: f64,
    face: usize,
) -> (f64, Vec<f64>) {
    let n = x.len();
    let free: Vec<usize> = (0..n).filter(|&c| c != face).collect();

    let mut directions: Vec<Vec<f64>> = Vec::new();
    for &c in &free {
        let mut d = vec![0.0; n];
        d[c] = 1.0;
        directions.push(d);
    }
    for (k, &c1) in free.iter().enumerate() {
        for &c2 in &free[k + 1..] {
            for sign in [1.0, -1.0] {
                let mut d = vec![0.0; n];
                d[c1] = std::f64::consts::FRAC_1_SQRT_2;
                d[c2] = sign * std::f64::consts::FRAC_1_SQRT_2;
                directions.push(d);
            }
        }
    }

    let mut step = spacing;
    for _ in 0..REFINE_SWEEPS {
        for d in &directions {
            // largest |t| <= step keeping every coordinate inside [-1, 1]
            let mut t_lo = -step;
            let mut t_hi = step;
            for (c, &dc) in d.iter().enumerate() {
                if dc == 0.0 {
                    continue;
                }
                let room_up = (1.0 - x[c]) / dc;
                let room_down = (-1.0 - x[c]) / dc;
                let (lo_c, hi_c) = if dc > 0.0 {
                    (room_down, room_up)
                } else {
                    (room_up, room_down)
                };
                t_lo = t_lo.max(lo_c);
                t_hi = t_hi.min(hi_c);
            }
            if t_hi <= t_lo {
                continue;
            }
            let (cand, neg) = golden_section_minimize(
                |t| {
                    let y: Vec<f64> = x.iter().zip(d).map(|(&xc, &dc)| xc + t * dc).collect();
                    -ratio(&y)
                },
                t_lo,
                t_hi,
                1e-14 * (t_hi - t_lo).max(1e-300),
                REFINE_EVALS,
            );
            if -neg > value {
                value = -neg;
                for (c, &dc) in d.iter().enumerate() {
                    if dc != 0.0 {
                        x[c] = (x[c] + cand * dc).clamp(-1.0, 1.0);
                    }
                }
            }
        }
        step *= 0.6;
    }
    (value, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::groups::{FiniteGroup, SignedPermRep};

    fn p(v: f64) -> Exponent {
        Exponent::finite(v).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let id = OperatorMatrix::identity(2, p(2.7)).unwrap();
        let est = estimate(&id, 201).unwrap();
        assert!((est.lower - 1.0).abs() < 1e-6);

        // a swap is an isometry at every exponent
        let swap = OperatorMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]], p(3.0)).unwrap();
        let est = estimate(&swap, 201).unwrap();
        assert!((est.lower - 1.0).abs() < 1e-9);
    }

    #[test]
    fn mean_complement_at_inf() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let rep = SignedPermRep::regular(&g, Exponent::INF);
        let c = rep.invariant_projection().unwrap().complement().clone();
        let est = estimate(&c, 61).unwrap();
        assert!(
            (est.lower - 4.0 / 3.0).abs() < 1e-6,
            "got {}",
            est.lower
        );
        let ratio = est.witness_ratio(&c).unwrap();
        assert!((ratio - est.lower).abs() <= 1e-9 * (1.0 + est.lower));
    }

    #[test]
    fn dimension_limit() {
        let a = OperatorMatrix::identity(5, p(3.0)).unwrap();
        assert!(matches!(estimate(&a, 11), Err(Error::DimensionTooLarge(5))));
    }

    #[test]
    fn one_dimensional_case() {
        let a = OperatorMatrix::from_rows(vec![vec![-2.5]], p(1.3)).unwrap();
        let est = estimate(&a, 11).unwrap();
        assert_eq!(est.lower, 2.5);
    }

    #[test]
    fn diagonal_four_dimensional() {
        let d = OperatorMatrix::diagonal(&[0.5, -3.0, 1.0, 2.0], p(2.4)).unwrap();
        let est = estimate(&d, 15).unwrap();
        assert!((est.lower - 3.0).abs() < 1e-6, "got {}", est.lower);
    }
}

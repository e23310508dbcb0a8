//! Birkhoff-James orthogonality by two independent routes.
//!
//! v is Birkhoff-James orthogonal to w when ||v|| <= ||v + t w|| for every
//! real t. The first route evaluates the pairing <w, J(v)> against the
//! duality map: it vanishes exactly at orthogonal pairs, and its sign tells
//! which direction along w shortens v. The second route minimizes
//! phi(t) = ||v + t w|| directly; phi is convex, so a golden-section search
//! over a bracket that provably contains the minimizer is enough. The two
//! routes cross-validate each other; the relation is asymmetric in (v, w)
//! whenever p != 2.

use crate::dense::DenseVector;
use crate::error::{Error, Result};

/// Golden-section search for the minimum of a convex `f` on `[a, b]`.
///
/// Returns `(x_min, f_min)` once the bracket is narrower than `tol_width`
/// or `max_evals` evaluations were spent.
pub fn golden_section_minimize(
    mut f: impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol_width: f64,
    max_evals: usize,
) -> (f64, f64) {
    const PHI: f64 = 1.618_033_988_749_895;
    const RESP: f64 = 2.0 - PHI;

    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;

    while evals < max_evals && (b - a).abs() > tol_width {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2);
        }
        evals += 1;
    }

    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimizes a convex norm profile phi(t) = ||v + t w|| given the two norms.
///
/// Outside |t| <= 2 ||v|| / ||w|| the triangle inequality forces
/// phi(t) >= |t| ||w|| - ||v|| > ||v|| >= phi(0), so the global minimizer
/// lives in that bracket. The search narrows it to 1e-12 of its width.
///
/// Near the minimum, phi is constant to machine precision over a plateau
/// whose width grows as the curvature shrinks; a value-based search can
/// only place the minimizer somewhere inside it. The reported minimizer is
/// the plateau midpoint: both edges are located by bisection, and for a
/// convex profile the true minimizer lies between them, centered up to
/// higher-order asymmetry.
pub(crate) fn minimize_norm_profile(
    norm_v: f64,
    norm_w: f64,
    phi: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let radius = 2.0 * norm_v / norm_w;
    if radius == 0.0 {
        return (0.0, phi(0.0));
    }
    let (x_hat, f_hat) = golden_section_minimize(&phi, -radius, radius, 1e-12 * 2.0 * radius, 400);

    let left = plateau_edge(&phi, f_hat, -radius, x_hat);
    let right = plateau_edge(&phi, f_hat, radius, x_hat);
    let mid = 0.5 * (left + right);
    let f_mid = phi(mid);
    if f_mid <= f_hat {
        (mid, f_mid)
    } else {
        (mid, f_hat)
    }
}

/// Bisects for the farthest point toward `outside` where phi still equals
/// the minimum value (in floating point).
fn plateau_edge(phi: impl Fn(f64) -> f64, f_min: f64, outside: f64, inside: f64) -> f64 {
    if phi(outside) <= f_min {
        return outside;
    }
    let mut lo = inside; // phi(lo) <= f_min
    let mut hi = outside; // phi(hi) > f_min
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if phi(mid) <= f_min {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The quantity <w, J(v)>. Zero exactly when v is Birkhoff-James orthogonal
/// to w; nonnegative exactly when ||v|| <= ||v + t w|| for every t > 0.
pub fn kato_pairing(v: &DenseVector, w: &DenseVector) -> Result<f64> {
    if v.is_zero() {
        return Err(Error::ZeroVector { role: "v" });
    }
    w.pair(&v.duality_map()?)
}

/// Global minimizer and minimum of phi(t) = ||v + t w|| over the reals.
pub fn bj_minimize(v: &DenseVector, w: &DenseVector) -> Result<(f64, f64)> {
    if w.is_zero() {
        return Err(Error::ZeroVector { role: "w" });
    }
    if v.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: w.dim(),
        });
    }
    let phi = |t: f64| v.add_scaled(t, w).expect("dims checked").norm();
    Ok(minimize_norm_profile(v.norm(), w.norm(), phi))
}

/// Diagnostics from deciding whether v is Birkhoff-James orthogonal to w.
#[derive(Debug, Clone, PartialEq)]
pub struct BjReport {
    /// The duality-map route: <w, J(v)>.
    pub kato_pairing: f64,
    /// Minimizer of ||v + t w|| from the direct route.
    pub min_lambda: f64,
    /// Minimum of ||v + t w||.
    pub min_value: f64,
    /// Verdict: the minimum stays at ||v|| up to the tolerance.
    pub orthogonal: bool,
    /// Relative tolerance the verdict was taken at.
    pub tolerance: f64,
}

/// Runs both routes and reports. The verdict is taken from the direct
/// minimization: orthogonal iff min ||v + t w|| >= ||v|| (1 - tol).
pub fn bj_orthogonal(v: &DenseVector, w: &DenseVector, tol: f64) -> Result<BjReport> {
    let kato = kato_pairing(v, w)?;
    let (min_lambda, min_value) = bj_minimize(v, w)?;
    let orthogonal = min_value >= v.norm() * (1.0 - tol);
    Ok(BjReport {
        kato_pairing: kato,
        min_lambda,
        min_value,
        orthogonal,
        tolerance: tol,
    })
}

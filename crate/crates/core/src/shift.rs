//! The shift testbed: the integers acting by translation on finitely
//! supported sequences, direct-p-summed with a finite trivial factor.
//!
//! The model space is lp(Z) ⊕_p R^d where the group shifts the sequence
//! factor and fixes R^d, so the invariant vectors are exactly the fixed
//! factor and the complement is the sequence factor. Because supports are
//! finite, "eventually" statements become exact: pairings of translates
//! vanish identically once the supports separate, which turns weak-limit
//! claims into finitely checkable identities instead of truncation
//! estimates.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::norms;
use crate::operator::OperatorMatrix;
use crate::opnorm::{opnorm_power, NormEstimate};
use crate::orthogonality::minimize_norm_profile;
use crate::sparse::SparseSeq;

/// The ambient model: sequence factor plus a trivial factor of dimension
/// `trivial_dim`, both under the same exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftModel {
    trivial_dim: usize,
    ambient: Exponent,
}

/// A vector of the model: a finitely supported sequence and a fixed part.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelVector {
    seq: SparseSeq,
    fixed: Vec<f64>,
}

impl ModelVector {
    pub fn seq(&self) -> &SparseSeq {
        &self.seq
    }

    pub fn fixed(&self) -> &[f64] {
        &self.fixed
    }

    pub fn is_zero(&self) -> bool {
        self.seq.is_zero() && self.fixed.iter().all(|&x| x == 0.0)
    }
}

impl ShiftModel {
    pub fn new(trivial_dim: usize, ambient: Exponent) -> ShiftModel {
        ShiftModel {
            trivial_dim,
            ambient,
        }
    }

    pub fn trivial_dim(&self) -> usize {
        self.trivial_dim
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    pub fn vector(&self, seq: SparseSeq, fixed: Vec<f64>) -> Result<ModelVector> {
        if seq.ambient() != self.ambient {
            return Err(Error::MixedExponents);
        }
        if fixed.len() != self.trivial_dim {
            return Err(Error::FixedDimMismatch {
                expected: self.trivial_dim,
                got: fixed.len(),
            });
        }
        for (index, &value) in fixed.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index, value });
            }
        }
        Ok(ModelVector { seq, fixed })
    }

    /// A vector of the complement factor (zero fixed part).
    pub fn seq_vector(&self, seq: SparseSeq) -> Result<ModelVector> {
        self.vector(seq, vec![0.0; self.trivial_dim])
    }

    /// An invariant vector (zero sequence part).
    pub fn fixed_vector(&self, fixed: Vec<f64>) -> Result<ModelVector> {
        self.vector(SparseSeq::zero(self.ambient), fixed)
    }

    /// One lp norm across both factors; identical to the p-combination of
    /// the factor norms because the exponents agree.
    pub fn norm(&self, v: &ModelVector) -> f64 {
        norms::lp_norm(
            v.seq.iter().map(|(_, x)| x).chain(v.fixed.iter().copied()),
            self.ambient,
        )
    }

    pub fn pair(&self, v: &ModelVector, w: &ModelVector) -> f64 {
        v.seq.pair(&w.seq) + v.fixed.iter().zip(&w.fixed).map(|(a, b)| a * b).sum::<f64>()
    }

    /// Factorwise duality map with the global norm in the scale, which is
    /// the duality map of the p-sum; each factor's image stays in its own
    /// factor.
    pub fn duality_map(&self, v: &ModelVector) -> Result<ModelVector> {
        let p = self.ambient.require_smooth()?;
        let nv = self.norm(v);
        let seq = SparseSeq::from_pairs(
            v.seq
                .iter()
                .map(|(k, x)| (k, norms::dual_map_entry(x, nv, p))),
            self.ambient.dual(),
        )?;
        let fixed = v
            .fixed
            .iter()
            .map(|&x| norms::dual_map_entry(x, nv, p))
            .collect();
        Ok(ModelVector { seq, fixed })
    }

    /// The invariant projection applied to v: keeps the fixed factor.
    pub fn invariant_part(&self, v: &ModelVector) -> ModelVector {
        ModelVector {
            seq: SparseSeq::zero(v.seq.ambient()),
            fixed: v.fixed.clone(),
        }
    }

    /// The action of the group element g.
    pub fn translate(&self, v: &ModelVector, g: i64) -> Result<ModelVector> {
        Ok(ModelVector {
            seq: v.seq.shift(g)?,
            fixed: v.fixed.clone(),
        })
    }

    /// The matrix coefficient g -> <translate(v, g), w>.
    pub fn matrix_coefficient(&self, v: &ModelVector, w: &ModelVector, g: i64) -> Result<f64> {
        let shifted = v.seq.shift(g)?;
        Ok(shifted.pair(&w.seq)
            + v.fixed.iter().zip(&w.fixed).map(|(a, b)| a * b).sum::<f64>())
    }

    /// Smallest T such that the sequence parts of translate(v, g) and w have
    /// disjoint supports for every |g| > T; coefficients vanish exactly
    /// beyond it.
    pub fn vanishing_threshold(v: &SparseSeq, w: &SparseSeq) -> i64 {
        match (v.min_index(), v.max_index(), w.min_index(), w.max_index()) {
            (Some(vmin), Some(vmax), Some(wmin), Some(wmax)) => {
                // overlap requires g in [wmin - vmax, wmax - vmin]
                (wmax - vmin).abs().max((wmin - vmax).abs())
            }
            _ => 0,
        }
    }
}

/// Residuals of the matrix coefficients against their claimed limit, for
/// the group elements g and their inverses.
#[derive(Debug, Clone)]
pub struct WotReport {
    /// |<translate(v, g_n), w> - <Pv, w>|.
    pub forward: Vec<f64>,
    /// The same with g_n replaced by -g_n.
    pub backward: Vec<f64>,
    /// Both residual sequences are exactly zero past this threshold.
    pub threshold: i64,
}

impl ShiftModel {
    /// Checks the weak-operator convergence of the translates to the
    /// invariant projection along `g_list` (strictly increasing in |g|),
    /// in both directions.
    pub fn wot_limit_check(
        &self,
        v: &ModelVector,
        w: &ModelVector,
        g_list: &[i64],
    ) -> Result<WotReport> {
        if g_list.is_empty() {
            return Err(Error::EmptyList { what: "g_list" });
        }
        if !g_list.windows(2).all(|p| p[1].abs() > p[0].abs()) {
            return Err(Error::NotIncreasing { what: "g_list" });
        }
        let limit = self.pair(&self.invariant_part(v), w);
        let mut forward = Vec::with_capacity(g_list.len());
        let mut backward = Vec::with_capacity(g_list.len());
        for &g in g_list {
            forward.push((self.matrix_coefficient(v, w, g)? - limit).abs());
            backward.push((self.matrix_coefficient(v, w, -g)? - limit).abs());
        }
        Ok(WotReport {
            forward,
            backward,
            threshold: ShiftModel::vanishing_threshold(&v.seq, &w.seq),
        })
    }
}

/// Everything checked by [`ShiftModel::orthogonality_certificate`].
#[derive(Debug, Clone)]
pub struct CertificateReport {
    /// <w, J(translate(v, -g_n))>; exactly zero for every n.
    pub pairings_forward: Vec<f64>,
    /// <w, J(translate(v, +g_n))>.
    pub pairings_backward: Vec<f64>,
    pub kato_pairing: f64,
    pub min_lambda: f64,
    pub min_value: f64,
    pub orthogonal: bool,
    /// Norm of I - P restricted to a finite window around the support.
    pub complement_norm: f64,
    pub complement_converged: bool,
    /// Window of sequence indices the complement was truncated to.
    pub window: (i64, i64),
    pub passed: bool,
}

impl ShiftModel {
    /// Certifies, on one concrete pair, the chain that makes the complement
    /// norm-one: v from the sequence factor, w invariant, and
    ///
    /// 1. the dual pairings <w, J(translate(v, ±g))> vanish exactly for
    ///    every listed g (the duality image of a sequence vector has no
    ///    invariant component);
    /// 2. v is Birkhoff-James orthogonal to w, by both routes;
    /// 3. I - P truncated to any finite window containing the support is a
    ///    coordinate restriction of norm exactly 1.
    pub fn orthogonality_certificate(
        &self,
        v: &ModelVector,
        w: &ModelVector,
        g_list: &[i64],
    ) -> Result<CertificateReport> {
        self.ambient.require_smooth()?;
        if v.fixed.iter().any(|&x| x != 0.0) {
            return Err(Error::SubspaceViolation(
                "v must lie in the sequence factor (zero fixed part)",
            ));
        }
        if !w.seq.is_zero() {
            return Err(Error::SubspaceViolation(
                "w must lie in the invariant factor (zero sequence part)",
            ));
        }
        if v.seq.is_zero() {
            return Err(Error::ZeroVector { role: "v" });
        }
        if w.fixed.iter().all(|&x| x == 0.0) {
            return Err(Error::ZeroVector { role: "w" });
        }
        if g_list.is_empty() {
            return Err(Error::EmptyList { what: "g_list" });
        }
        if !g_list.windows(2).all(|p| p[1].abs() > p[0].abs()) {
            return Err(Error::NotIncreasing { what: "g_list" });
        }

        let mut pairings_forward = Vec::with_capacity(g_list.len());
        let mut pairings_backward = Vec::with_capacity(g_list.len());
        for &g in g_list {
            let back = self.duality_map(&self.translate(v, -g)?)?;
            pairings_forward.push(self.pair(w, &back));
            let fore = self.duality_map(&self.translate(v, g)?)?;
            pairings_backward.push(self.pair(w, &fore));
        }
        let all_zero = pairings_forward
            .iter()
            .chain(&pairings_backward)
            .all(|&c| c == 0.0);

        // Birkhoff-James orthogonality of v to w, both routes.
        let kato_pairing = self.pair(w, &self.duality_map(v)?);
        let norm_v = self.norm(v);
        let norm_w = self.norm(w);
        let phi = |t: f64| {
            let line = ModelVector {
                seq: v.seq.clone(),
                fixed: v.fixed.iter().zip(&w.fixed).map(|(a, b)| a + t * b).collect(),
            };
            self.norm(&line)
        };
        let (min_lambda, min_value) = minimize_norm_profile(norm_v, norm_w, phi);
        let orthogonal = min_value >= norm_v * (1.0 - 1e-9);

        // Truncated complement: identity on the window's sequence
        // coordinates, zero on the trivial factor.
        let lo = v.seq.min_index().expect("nonzero") - 1;
        let hi = v.seq.max_index().expect("nonzero") + 1;
        let window_len = (hi - lo + 1) as usize;
        let mut diag = vec![1.0; window_len];
        diag.extend(std::iter::repeat_n(0.0, self.trivial_dim));
        let truncated = OperatorMatrix::diagonal(&diag, self.ambient)?;
        let complement: NormEstimate = opnorm_power(&truncated, 0, 1_000)?;

        let passed = all_zero
            && orthogonal
            && (complement.lower - 1.0).abs() <= 1e-9
            && complement.converged;

        Ok(CertificateReport {
            pairings_forward,
            pairings_backward,
            kato_pairing,
            min_lambda,
            min_value,
            orthogonal,
            complement_norm: complement.lower,
            complement_converged: complement.converged,
            window: (lo, hi),
            passed,
        })
    }
}

/// The two limits in the Opial inequality for the translated-bump sequence
/// x_n = v + translate(u, n), whose weak limit is v.
#[derive(Debug, Clone, Copy)]
pub struct OpialGap {
    /// lim ||x_n - v||, which is ||u|| exactly.
    pub to_weak_limit: f64,
    /// lim ||x_n - y||, which is (||v - y||^p + ||u||^p)^(1/p) exactly.
    pub to_y: f64,
}

impl OpialGap {
    pub fn gap(&self) -> f64 {
        self.to_y - self.to_weak_limit
    }

    pub fn is_strict(&self) -> bool {
        self.to_y > self.to_weak_limit
    }
}

/// Closed-form Opial limits: once n passes the support-disjointness
/// threshold both distances are constant, so the liminf is evaluated
/// symbolically instead of at a large n.
pub fn opial_gap(v: &SparseSeq, u: &SparseSeq, y: &SparseSeq) -> Result<OpialGap> {
    let p = v.ambient();
    if p.is_inf() {
        return Err(Error::FiniteExponentRequired("opial limits"));
    }
    if u.ambient() != p || y.ambient() != p {
        return Err(Error::MixedExponents);
    }
    if u.is_zero() {
        return Err(Error::ZeroVector { role: "u" });
    }
    let to_weak_limit = u.norm();
    let to_y = norms::psum_combine([v.sub(y)?.norm(), to_weak_limit].into_iter(), p);
    Ok(OpialGap {
        to_weak_limit,
        to_y,
    })
}

/// Residuals |<w, J(x_n - v)>| for x_n = v + translate(u, n): the dual-map
/// form of weak convergence. The duality map preserves supports, so the
/// residuals vanish exactly once translate(u, n) clears the support of w.
pub fn delta_convergence_check(
    v: &SparseSeq,
    u: &SparseSeq,
    w: &SparseSeq,
    n_list: &[i64],
) -> Result<Vec<f64>> {
    let p = v.ambient();
    if u.ambient() != p {
        return Err(Error::MixedExponents);
    }
    p.require_smooth()?;
    let mut residuals = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let x_n = v.add(&u.shift(n)?)?;
        let diff = x_n.sub(v)?;
        residuals.push(w.pair(&diff.duality_map()?).abs());
    }
    Ok(residuals)
}

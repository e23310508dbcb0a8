//! Finite-dimensional vectors with an ambient norm exponent: the working
//! model of lp^n.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::norms;

/// A nonempty vector of finite reals together with the exponent of the
/// space it lives in. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    entries: Vec<f64>,
    ambient: Exponent,
}

impl DenseVector {
    pub fn new(entries: Vec<f64>, ambient: Exponent) -> Result<DenseVector> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        for (index, &value) in entries.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index, value });
            }
        }
        Ok(DenseVector { entries, ambient })
    }

    /// The j-th standard basis vector of lp^n.
    pub fn basis(n: usize, j: usize, ambient: Exponent) -> Result<DenseVector> {
        if j >= n {
            return Err(Error::DimensionMismatch { left: j, right: n });
        }
        let mut entries = vec![0.0; n];
        entries[j] = 1.0;
        DenseVector::new(entries, ambient)
    }

    pub fn zeros(n: usize, ambient: Exponent) -> Result<DenseVector> {
        DenseVector::new(vec![0.0; n], ambient)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// The same entries reinterpreted in another exponent's space.
    pub fn with_ambient(&self, ambient: Exponent) -> DenseVector {
        DenseVector {
            entries: self.entries.clone(),
            ambient,
        }
    }

    /// The norm in the ambient exponent. Zero exactly when the vector is zero.
    pub fn norm(&self) -> f64 {
        norms::lp_norm(self.entries.iter().copied(), self.ambient)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0.0)
    }

    /// The bilinear pairing sum_i v_i w_i, with `other` read as a vector of
    /// the dual space. Only the dimensions must match.
    pub fn pair(&self, other: &DenseVector) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// The duality map J: the unique dual vector with <v, J(v)> = ||v||^2 and
    /// ||J(v)||_q = ||v||_p. Entrywise ||v||^(2-p) |v_i|^(p-1) sign(v_i);
    /// the zero vector maps to zero. Defined only for p strictly between
    /// 1 and infinity, where the norm is smooth.
    pub fn duality_map(&self) -> Result<DenseVector> {
        let p = self.ambient.require_smooth()?;
        let nv = self.norm();
        let entries = self
            .entries
            .iter()
            .map(|&x| norms::dual_map_entry(x, nv, p))
            .collect();
        let image = DenseVector {
            entries,
            ambient: self.ambient.dual(),
        };
        debug_assert!(
            {
                // both defining identities of the image, checked on every
                // debug-build call; the tolerance widens with p to absorb
                // powf error growth
                let tol = 1e-9f64.max(p * 1e-13);
                let pairing = self.pair(&image).expect("same dimension");
                (pairing - nv * nv).abs() <= tol * (1.0 + nv * nv)
                    && (image.norm() - nv).abs() <= tol * (1.0 + nv)
            },
            "duality map identities violated"
        );
        Ok(image)
    }

    /// The inverse of the duality map: reading `self` as a dual-space vector
    /// in lq, this is the lq duality map, landing back in lp.
    pub fn inverse_duality_map(&self) -> Result<DenseVector> {
        self.duality_map()
    }

    pub fn scale(&self, t: f64) -> DenseVector {
        DenseVector {
            entries: self.entries.iter().map(|x| x * t).collect(),
            ambient: self.ambient,
        }
    }

    pub fn add(&self, other: &DenseVector) -> Result<DenseVector> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &DenseVector) -> Result<DenseVector> {
        self.zip_with(other, |a, b| a - b)
    }

    /// self + t * other, the line along which Birkhoff-James orthogonality
    /// is probed.
    pub fn add_scaled(&self, t: f64, other: &DenseVector) -> Result<DenseVector> {
        self.zip_with(other, |a, b| a + t * b)
    }

    fn zip_with(&self, other: &DenseVector, f: impl Fn(f64, f64) -> f64) -> Result<DenseVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(DenseVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            ambient: self.ambient,
        })
    }
}

/// The p-sum embedding of a list of blocks: their concatenation, with the
/// block boundaries kept so block components stay addressable.
#[derive(Debug, Clone)]
pub struct PsumVector {
    vector: DenseVector,
    block_dims: Vec<usize>,
}

/// Concatenates blocks sharing the exponent `p`. The norm of the result is
/// the lp combination of the block norms (max for p = infinity).
pub fn psum_embed(blocks: &[DenseVector], p: Exponent) -> Result<PsumVector> {
    if blocks.is_empty() {
        return Err(Error::EmptyList { what: "block list" });
    }
    let mut entries = Vec::new();
    let mut block_dims = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.ambient() != p {
            return Err(Error::MixedExponents);
        }
        block_dims.push(block.dim());
        entries.extend_from_slice(block.entries());
    }
    Ok(PsumVector {
        vector: DenseVector::new(entries, p)?,
        block_dims,
    })
}

impl PsumVector {
    pub fn vector(&self) -> &DenseVector {
        &self.vector
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn block_count(&self) -> usize {
        self.block_dims.len()
    }

    /// Entries of the k-th block.
    pub fn block(&self, k: usize) -> &[f64] {
        let start: usize = self.block_dims[..k].iter().sum();
        &self.vector.entries()[start..start + self.block_dims[k]]
    }

    pub fn norm(&self) -> f64 {
        self.vector.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: f64) -> Exponent {
        Exponent::finite(v).unwrap()
    }

    #[test]
    fn norm_examples() {
        let v = DenseVector::new(vec![1.0, 1.0, -1.0], Exponent::INF).unwrap();
        assert_eq!(v.norm(), 1.0);

        let v = DenseVector::new(vec![3.0, 4.0], Exponent::TWO).unwrap();
        assert!((v.norm() - 5.0).abs() < 1e-15);

        let v = DenseVector::new(vec![1.0, 1.0], p(3.0)).unwrap();
        assert!((v.norm() - 2f64.powf(1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn pair_examples() {
        let e1 = DenseVector::new(vec![1.0, 0.0], Exponent::TWO).unwrap();
        let e2 = DenseVector::new(vec![0.0, 1.0], Exponent::TWO).unwrap();
        assert_eq!(e1.pair(&e2).unwrap(), 0.0);

        let a = DenseVector::new(vec![1.0, 1.0], Exponent::TWO).unwrap();
        let b = DenseVector::new(vec![1.0, -1.0], Exponent::TWO).unwrap();
        assert_eq!(a.pair(&b).unwrap(), 0.0);

        let a = DenseVector::new(vec![2.0, 1.0], Exponent::TWO).unwrap();
        let b = DenseVector::new(vec![4.0, 1.0], Exponent::TWO).unwrap();
        assert_eq!(a.pair(&b).unwrap(), 9.0);

        let short = DenseVector::new(vec![1.0], Exponent::TWO).unwrap();
        assert!(matches!(
            a.pair(&short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn duality_map_examples() {
        // p = 2: J is the identity
        let v = DenseVector::new(vec![3.0, 4.0], Exponent::TWO).unwrap();
        let j = v.duality_map().unwrap();
        assert!((j.entries()[0] - 3.0).abs() < 1e-12);
        assert!((j.entries()[1] - 4.0).abs() < 1e-12);
        assert_eq!(j.ambient(), Exponent::TWO);

        // p = 3 on (1,1): both entries 2^(-1/3)
        let v = DenseVector::new(vec![1.0, 1.0], p(3.0)).unwrap();
        let j = v.duality_map().unwrap();
        let expect = 2f64.powf(-1.0 / 3.0);
        assert!((j.entries()[0] - expect).abs() < 1e-12);
        assert!((j.entries()[1] - expect).abs() < 1e-12);
        // defining identities
        assert!((v.pair(&j).unwrap() - v.norm().powi(2)).abs() < 1e-12);
        assert!((j.norm() - v.norm()).abs() < 1e-12);
        assert_eq!(j.ambient().finite_value(), Some(1.5));

        // J(0) = 0
        let z = DenseVector::zeros(3, p(1.5)).unwrap();
        assert!(z.duality_map().unwrap().is_zero());
    }

    #[test]
    fn duality_map_rejects_endpoint_exponents() {
        let v = DenseVector::new(vec![1.0, 2.0], Exponent::ONE).unwrap();
        assert!(matches!(v.duality_map(), Err(Error::DualityUndefined(_))));
        let v = DenseVector::new(vec![1.0, 2.0], Exponent::INF).unwrap();
        assert!(matches!(v.duality_map(), Err(Error::DualityUndefined(_))));
    }

    #[test]
    fn inverse_duality_round_trip() {
        let v = DenseVector::new(vec![1.0, 1.0], p(3.0)).unwrap();
        let back = v.duality_map().unwrap().inverse_duality_map().unwrap();
        assert!((back.entries()[0] - 1.0).abs() < 1e-12);
        assert!((back.entries()[1] - 1.0).abs() < 1e-12);
        assert_eq!(back.ambient().finite_value(), Some(3.0));

        let w = DenseVector::new(vec![3.0, 4.0], Exponent::TWO).unwrap();
        let u = w.inverse_duality_map().unwrap();
        assert!((u.entries()[0] - 3.0).abs() < 1e-12);

        let z = DenseVector::zeros(2, p(4.0)).unwrap();
        assert!(z.inverse_duality_map().unwrap().is_zero());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            DenseVector::new(vec![], Exponent::TWO),
            Err(Error::EmptyVector)
        ));
        assert!(matches!(
            DenseVector::new(vec![1.0, f64::NAN], Exponent::TWO),
            Err(Error::NonFiniteEntry { index: 1, .. })
        ));
    }

    #[test]
    fn psum_examples() {
        let one_block = psum_embed(
            &[DenseVector::new(vec![1.0, 0.0], p(3.0)).unwrap()],
            p(3.0),
        )
        .unwrap();
        assert_eq!(one_block.block_count(), 1);
        assert_eq!(one_block.vector().entries(), &[1.0, 0.0]);

        let a = DenseVector::new(vec![1.0, 1.0], Exponent::INF).unwrap();
        let b = DenseVector::new(vec![-1.0], Exponent::INF).unwrap();
        let s = psum_embed(&[a, b], Exponent::INF).unwrap();
        assert_eq!(s.vector().entries(), &[1.0, 1.0, -1.0]);
        assert_eq!(s.norm(), 1.0);
        assert_eq!(s.block(1), &[-1.0]);

        let a = DenseVector::new(vec![1.0, 0.0], p(3.0)).unwrap();
        let b = DenseVector::new(vec![0.0, 1.0], p(3.0)).unwrap();
        let s = psum_embed(&[a, b], p(3.0)).unwrap();
        assert!((s.norm() - 2f64.powf(1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn psum_rejects_mixed_exponents() {
        let a = DenseVector::new(vec![1.0], p(3.0)).unwrap();
        let b = DenseVector::new(vec![1.0], Exponent::TWO).unwrap();
        assert!(matches!(
            psum_embed(&[a, b], p(3.0)),
            Err(Error::MixedExponents)
        ));
        assert!(matches!(
            psum_embed(&[], p(3.0)),
            Err(Error::EmptyList { .. })
        ));
    }
}

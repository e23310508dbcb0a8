//! Finitely supported sequences over the integers: the working model of
//! vectors in lp(Z).
//!
//! Only nonzero values are stored; lookups off the support return 0. The
//! support is kept in a BTreeMap so iteration order, and with it every
//! floating-point reduction, is deterministic.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::norms;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct SparseSeq {
    support: BTreeMap<i64, f64>,
    ambient: Exponent,
}

impl SparseSeq {
    /// Builds from (index, value) pairs; zero values are dropped, repeated
    /// indices accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, f64)>, ambient: Exponent) -> Result<SparseSeq> {
        let mut support = BTreeMap::new();
        for (index, value) in pairs {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry {
                    index: index.unsigned_abs() as usize,
                    value,
                });
            }
            let entry = support.entry(index).or_insert(0.0);
            *entry += value;
        }
        support.retain(|_, v| *v != 0.0);
        Ok(SparseSeq { support, ambient })
    }

    pub fn zero(ambient: Exponent) -> SparseSeq {
        SparseSeq {
            support: BTreeMap::new(),
            ambient,
        }
    }

    /// The unit bump at `index`.
    pub fn delta(index: i64, ambient: Exponent) -> SparseSeq {
        let mut support = BTreeMap::new();
        support.insert(index, 1.0);
        SparseSeq { support, ambient }
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    pub fn get(&self, index: i64) -> f64 {
        self.support.get(&index).copied().unwrap_or(0.0)
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.support.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.support.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.support.iter().map(|(&k, &v)| (k, v))
    }

    pub fn norm(&self) -> f64 {
        norms::lp_norm(self.support.values().copied(), self.ambient)
    }

    /// The translate by k: (shift(x, k))(i) = x(i - k). An exact isometry
    /// at every exponent. Shifts that would overflow an index are rejected.
    pub fn shift(&self, k: i64) -> Result<SparseSeq> {
        let mut support = BTreeMap::new();
        for (&index, &value) in &self.support {
            let moved = index
                .checked_add(k)
                .ok_or(Error::IndexOverflow { index, shift: k })?;
            support.insert(moved, value);
        }
        Ok(SparseSeq {
            support,
            ambient: self.ambient,
        })
    }

    /// Pairing sum_i x(i) w(i) over the common support, `other` read in the
    /// dual space.
    pub fn pair(&self, other: &SparseSeq) -> f64 {
        self.support
            .iter()
            .map(|(k, v)| v * other.get(*k))
            .sum()
    }

    /// Entrywise duality map; preserves the support. See
    /// [`DenseVector::duality_map`](crate::dense::DenseVector::duality_map).
    pub fn duality_map(&self) -> Result<SparseSeq> {
        let p = self.ambient.require_smooth()?;
        let nv = self.norm();
        let support = self
            .support
            .iter()
            .map(|(&k, &v)| (k, norms::dual_map_entry(v, nv, p)))
            .filter(|(_, v)| *v != 0.0)
            .collect();
        let image = SparseSeq {
            support,
            ambient: self.ambient.dual(),
        };
        debug_assert!(
            {
                let tol = 1e-9f64.max(p * 1e-13);
                (self.pair(&image) - nv * nv).abs() <= tol * (1.0 + nv * nv)
                    && (image.norm() - nv).abs() <= tol * (1.0 + nv)
            },
            "duality map identities violated"
        );
        Ok(image)
    }

    pub fn add(&self, other: &SparseSeq) -> Result<SparseSeq> {
        if self.ambient != other.ambient {
            return Err(Error::MixedExponents);
        }
        SparseSeq::from_pairs(self.iter().chain(other.iter()), self.ambient)
    }

    pub fn sub(&self, other: &SparseSeq) -> Result<SparseSeq> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, t: f64) -> SparseSeq {
        SparseSeq {
            support: self
                .support
                .iter()
                .map(|(&k, &v)| (k, v * t))
                .filter(|(_, v)| *v != 0.0)
                .collect(),
            ambient: self.ambient,
        }
    }

    /// True when the supports of self and other share no index.
    pub fn disjoint_from(&self, other: &SparseSeq) -> bool {
        self.support.keys().all(|k| !other.support.contains_key(k))
    }
}

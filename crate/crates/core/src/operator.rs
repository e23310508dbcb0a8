//! Dense square matrices acting on lp^n.

use crate::dense::DenseVector;
use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// A square real matrix together with the exponent of the space it acts on.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    n: usize,
    entries: Vec<f64>, // row-major
    ambient: Exponent,
}

impl OperatorMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>, ambient: Exponent) -> Result<OperatorMatrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for (index, &value) in row.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::NonFiniteEntry { index, value });
                }
                entries.push(value);
            }
        }
        Ok(OperatorMatrix { n, entries, ambient })
    }

    pub fn from_fn(
        n: usize,
        ambient: Exponent,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<OperatorMatrix> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let value = f(i, j);
                if !value.is_finite() {
                    return Err(Error::NonFiniteEntry { index: i * n + j, value });
                }
                entries.push(value);
            }
        }
        Ok(OperatorMatrix { n, entries, ambient })
    }

    pub fn identity(n: usize, ambient: Exponent) -> Result<OperatorMatrix> {
        OperatorMatrix::from_fn(n, ambient, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diagonal(diag: &[f64], ambient: Exponent) -> Result<OperatorMatrix> {
        OperatorMatrix::from_fn(diag.len(), ambient, |i, j| if i == j { diag[i] } else { 0.0 })
    }

    /// Block-diagonal assembly; blocks must share the exponent.
    pub fn block_diag(blocks: &[OperatorMatrix], ambient: Exponent) -> Result<OperatorMatrix> {
        if blocks.is_empty() {
            return Err(Error::EmptyList { what: "block list" });
        }
        for b in blocks {
            if b.ambient != ambient {
                return Err(Error::MixedExponents);
            }
        }
        let total: usize = blocks.iter().map(|b| b.n).sum();
        let mut entries = vec![0.0; total * total];
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    entries[(offset + i) * total + (offset + j)] = b.entry(i, j);
                }
            }
            offset += b.n;
        }
        Ok(OperatorMatrix {
            n: total,
            entries,
            ambient,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Exponent {
        self.ambient
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn with_ambient(&self, ambient: Exponent) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            entries: self.entries.clone(),
            ambient,
        }
    }

    pub fn apply_slice(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply(&self, v: &DenseVector) -> Result<DenseVector> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: v.dim(),
            });
        }
        if v.ambient() != self.ambient {
            return Err(Error::MixedExponents);
        }
        DenseVector::new(self.apply_slice(v.entries()), self.ambient)
    }

    pub fn transpose(&self) -> OperatorMatrix {
        let mut entries = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[j * self.n + i] = self.entry(i, j);
            }
        }
        OperatorMatrix {
            n: self.n,
            entries,
            ambient: self.ambient,
        }
    }

    pub fn matmul(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entry(k, j);
                }
            }
        }
        Ok(OperatorMatrix {
            n,
            entries,
            ambient: self.ambient,
        })
    }

    pub fn sub(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(OperatorMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
            ambient: self.ambient,
        })
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc: f64, &x| acc.max(x.abs()))
    }

    /// Largest entrywise difference |self - other|.
    pub fn max_abs_diff(&self, other: &OperatorMatrix) -> Result<f64> {
        Ok(self.sub(other)?.max_abs_entry())
    }
}

//! Logical matrices stored by column index.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::boolean::BoolMatrix;
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A matrix in L_{m×n}: every column is a canonical basis vector δ_m^i.
///
/// Column targets are 1-based, matching δ_m[i_1, …, i_n] notation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LogicalMatrix {
    rows: usize,
    col_index: Vec<usize>,
}

impl LogicalMatrix {
    /// `δ_rows[col_index…]`.
    pub fn new(rows: usize, col_index: Vec<usize>) -> Result<Self> {
        if rows == 0 {
            return Err(Error::dim("LogicalMatrix::new", "zero rows"));
        }
        if let Some(&bad) = col_index.iter().find(|&&i| i == 0 || i > rows) {
            return Err(Error::IndexOutOfRange {
                what: "logical column target",
                index: bad,
                max: rows,
            });
        }
        Ok(Self { rows, col_index })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            col_index: (1..=n).collect(),
        }
    }

    /// Swap matrix W_{[m,n]} with `W (x ⋉ y) = y ⋉ x` for x ∈ Δ_m, y ∈ Δ_n.
    pub fn swap(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("swap matrix needs m, n >= 1".into()));
        }
        // Column of x=δ_m^i, y=δ_n^j is (i-1)n + j; it must map to (j-1)m + i.
        let mut cols = Vec::with_capacity(m * n);
        for i in 1..=m {
            for j in 1..=n {
                cols.push((j - 1) * m + i);
            }
        }
        Self::new(m * n, cols)
    }

    /// Power-reducing matrix Φ_n = δ_{n²}[1, n+2, 2n+3, …, n²].
    pub fn power_reducing(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("power-reducing matrix needs n >= 1".into()));
        }
        Self::new(n * n, (1..=n).map(|i| (i - 1) * n + i).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.col_index.len()
    }

    pub fn col_index(&self) -> &[usize] {
        &self.col_index
    }

    /// Target row (1-based) of column `j` (1-based).
    pub fn target(&self, j: usize) -> Result<usize> {
        self.col_index
            .get(j.wrapping_sub(1))
            .copied()
            .ok_or(Error::IndexOutOfRange {
                what: "logical column",
                index: j,
                max: self.cols(),
            })
    }

    /// Columns `(b-1)·width + 1 ..= b·width` as their own logical matrix.
    pub fn column_block(&self, b: usize, width: usize) -> Result<Self> {
        let blocks = self.cols().checked_div(width).unwrap_or(0);
        if width == 0 || !self.cols().is_multiple_of(width) || b == 0 || b > blocks {
            return Err(Error::IndexOutOfRange {
                what: "column block",
                index: b,
                max: blocks,
            });
        }
        Ok(Self {
            rows: self.rows,
            col_index: self.col_index[(b - 1) * width..b * width].to_vec(),
        })
    }

    /// Logical product `self · other` (still logical).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::dim(
                "LogicalMatrix::compose",
                format!("{} columns vs {} rows", self.cols(), other.rows),
            ));
        }
        Ok(Self {
            rows: self.rows,
            col_index: other.col_index.iter().map(|&k| self.col_index[k - 1]).collect(),
        })
    }

    /// Khatri-Rao product of logical matrices, again logical.
    pub fn khatri_rao(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.cols() {
            return Err(Error::dim(
                "LogicalMatrix::khatri_rao",
                format!("{} vs {} columns", self.cols(), other.cols()),
            ));
        }
        Ok(Self {
            rows: self.rows * other.rows,
            col_index: self
                .col_index
                .iter()
                .zip(&other.col_index)
                .map(|(&i, &j)| (i - 1) * other.rows + j)
                .collect(),
        })
    }

    pub fn to_dense<T: Scalar>(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, &i) in self.col_index.iter().enumerate() {
            m.set(i - 1, j, T::one());
        }
        m
    }

    pub fn to_boolean(&self) -> BoolMatrix {
        let mut m = BoolMatrix::zeros(self.rows, self.cols());
        for (j, &i) in self.col_index.iter().enumerate() {
            m.set(i - 1, j, true);
        }
        m
    }

    /// Recovers a logical matrix from a dense 0/1 matrix with one 1 per column.
    pub fn from_dense<T: Scalar>(m: &Matrix<T>) -> Result<Self> {
        let mut cols = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let mut hit = None;
            for i in 0..m.rows() {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if hit.is_some() || !v.approx_eq(&T::one()) {
                    return Err(Error::InvalidArgument(format!("column {} is not a basis vector", j + 1)));
                }
                hit = Some(i + 1);
            }
            cols.push(hit.ok_or_else(|| Error::InvalidArgument(format!("column {} is zero", j + 1)))?);
        }
        Self::new(m.rows(), cols)
    }
}

impl fmt::Debug for LogicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}{:?}", self.rows, self.col_index)
    }
}

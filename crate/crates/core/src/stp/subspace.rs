//! Column spaces kept in reduced column-echelon form.

use std::fmt;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of R^ambient, represented by a canonical basis.
///
/// The basis is the reduced column-echelon form of any spanning set, so two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, PartialEq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Subspace<T> {
    /// The column space of `a`.
    pub fn column_space(a: &Matrix<T>) -> Self {
        let (rref, pivots) = a.transpose().rref();
        let r = pivots.len();
        let basis = rref.block(0, 0, r, a.rows()).transpose();
        Self {
            ambient: a.rows(),
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Sum of subspaces: the column space of their concatenated bases.
    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let parts: Vec<&Self> = parts.into_iter().collect();
        let Some(first) = parts.first() else {
            return Err(Error::dim("subspace sum", "no subspaces"));
        };
        let ambient = first.ambient;
        if let Some(p) = parts.iter().find(|p| p.ambient != ambient) {
            return Err(Error::dim(
                "subspace sum",
                format!("ambient dimensions {ambient} and {}", p.ambient),
            ));
        }
        let cols: usize = parts.iter().map(|p| p.rank()).sum();
        let mut stacked = Matrix::zeros(ambient, cols);
        let mut c0 = 0;
        for p in &parts {
            stacked.set_block(0, c0, &p.basis);
            c0 += p.rank();
        }
        Ok(Self::column_space(&stacked))
    }

    /// `small ⊆ self`, decided by `rank(self) == rank([self | small])`.
    pub fn contains(&self, small: &Self) -> Result<bool> {
        if self.ambient != small.ambient {
            return Err(Error::dim(
                "subspace containment",
                format!("ambient dimensions {} and {}", self.ambient, small.ambient),
            ));
        }
        Ok(Self::sum([self, small])?.rank() == self.rank())
    }

    /// `is_full` with an explicit ambient-dimension check.
    pub fn is_full_in(&self, n: usize) -> Result<bool> {
        if self.ambient != n {
            return Err(Error::dim(
                "subspace fullness",
                format!("ambient dimension {} vs {n}", self.ambient),
            ));
        }
        Ok(self.is_full())
    }
}

impl<T: Scalar> fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in R^{}: [{}])", self.rank(), self.ambient, self.basis)
    }
}

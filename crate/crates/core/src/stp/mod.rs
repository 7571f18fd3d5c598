//! Exact linear and Boolean matrix algebra: semi-tensor, Kronecker and
//! Khatri-Rao products, swap and power-reducing matrices, logical matrices,
//! rank and column spaces.

mod boolean;
mod logical;
mod matrix;
mod scalar;
mod subspace;

pub use boolean::{BoolMatrix, CountMatrix};
pub use logical::LogicalMatrix;
pub use matrix::{set_size_cap, size_cap, Matrix, DEFAULT_SIZE_CAP};
pub use scalar::{
    float_tolerance, set_float_tolerance, NumericMode, Rational, Scalar, DEFAULT_FLOAT_TOLERANCE,
};
pub use subspace::Subspace;

use crate::error::Result;

/// Semi-tensor product of two matrices.
pub fn stp<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    a.stp(b)
}

/// Left-to-right STP of a chain of factors.
pub fn stp_chain<T: Scalar>(factors: &[&Matrix<T>]) -> Result<Matrix<T>> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| crate::Error::InvalidArgument("empty STP chain".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, f| acc.stp(f))
}

pub fn kronecker<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    a.kron(b)
}

pub fn khatri_rao<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    a.khatri_rao(b)
}

pub fn swap_matrix(m: usize, n: usize) -> Result<LogicalMatrix> {
    LogicalMatrix::swap(m, n)
}

pub fn power_reducing_matrix(n: usize) -> Result<LogicalMatrix> {
    LogicalMatrix::power_reducing(n)
}

pub fn boolean_product(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    a.product(b)
}

pub fn column_space<T: Scalar>(a: &Matrix<T>) -> Subspace<T> {
    Subspace::column_space(a)
}

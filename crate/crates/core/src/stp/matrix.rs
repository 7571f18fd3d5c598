//! Dense matrices with exact or floating entries, plus the product family used
//! throughout: ordinary, Kronecker, Khatri-Rao and semi-tensor.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_integer::Integer;

use super::scalar::{NumericMode, Scalar};
use crate::error::{Error, Result};

/// Default upper bound on the number of entries a product may allocate.
pub const DEFAULT_SIZE_CAP: usize = 10_000_000;

static SIZE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SIZE_CAP);

pub fn size_cap() -> usize {
    SIZE_CAP.load(Ordering::Relaxed)
}

pub fn set_size_cap(cap: usize) {
    SIZE_CAP.store(cap.max(1), Ordering::Relaxed);
}

fn check_size(op: &'static str, rows: usize, cols: usize) -> Result<()> {
    let cap = size_cap();
    match rows.checked_mul(cols) {
        Some(n) if n <= cap => Ok(()),
        _ => Err(Error::Sizing { op, rows, cols, cap }),
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(
                "Matrix::new",
                format!("{} entries given for a {rows}x{cols} matrix", data.len()),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// Builds a matrix from integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&v| T::from_i64(v)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("Matrix::from_rows", "ragged rows"));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Column vector from entries.
    pub fn column_vector(entries: Vec<T>) -> Self {
        let n = entries.len();
        Self {
            rows: n,
            cols: 1,
            data: entries,
        }
    }

    /// The canonical basis vector δ_n^i (1-based `i`).
    pub fn delta(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                what: "basis vector",
                index: i,
                max: n,
            });
        }
        let mut m = Self::zeros(n, 1);
        m.data[i - 1] = T::one();
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Self {
        Self::column_vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Entrywise equality under the numeric mode's zero test.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Copy of the `height x width` block whose top-left corner is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, height: usize, width: usize) -> Self {
        assert!(r0 + height <= self.rows && c0 + width <= self.cols, "block out of bounds");
        let mut data = Vec::with_capacity(height * width);
        for i in r0..r0 + height {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + width]);
        }
        Self {
            rows: height,
            cols: width,
            data,
        }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of bounds"
        );
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::dim(
                "add",
                format!("{:?} + {:?}", self.shape(), other.shape()),
            ));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(Scalar::neg)
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim(
                "matmul",
                format!("{:?} * {:?}", self.shape(), other.shape()),
            ));
        }
        check_size("matmul", self.rows, other.cols)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                // The structured matrices here are overwhelmingly sparse.
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::dim(
                "mul_vec",
                format!("{:?} * vector of length {}", self.shape(), v.len()),
            ));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn hcat(parts: &[&Self]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::dim("hcat", "no blocks"));
        };
        let rows = first.rows;
        if parts.iter().any(|p| p.rows != rows) {
            return Err(Error::dim("hcat", "row counts differ"));
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for p in parts {
            out.set_block(0, c0, p);
            c0 += p.cols;
        }
        Ok(out)
    }

    pub fn vcat(parts: &[&Self]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::dim("vcat", "no blocks"));
        };
        let cols = first.cols;
        if parts.iter().any(|p| p.cols != cols) {
            return Err(Error::dim("vcat", "column counts differ"));
        }
        let mut data = Vec::new();
        for p in parts {
            data.extend_from_slice(&p.data);
        }
        Ok(Self {
            rows: parts.iter().map(|p| p.rows).sum(),
            cols,
            data,
        })
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        check_size("kronecker", rows, cols)?;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Khatri-Rao product: column `j` is `col_j(self) ⊗ col_j(other)`.
    pub fn khatri_rao(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::dim(
                "khatri_rao",
                format!("{} vs {} columns", self.cols, other.cols),
            ));
        }
        let rows = self.rows * other.rows;
        check_size("khatri_rao", rows, self.cols)?;
        let mut out = Self::zeros(rows, self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                for k in 0..other.rows {
                    out.set(i * other.rows + k, j, self.get(i, j).mul(other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Left semi-tensor product `(A ⊗ I_{t/n})(B ⊗ I_{t/p})`, `t = lcm(n, p)`.
    pub fn stp(&self, other: &Self) -> Result<Self> {
        if self.cols == 0 || other.rows == 0 {
            return Err(Error::dim("stp", "empty inner dimension"));
        }
        if self.cols == other.rows {
            return self.matmul(other);
        }
        let t = self.cols.lcm(&other.rows);
        let left_pad = t / self.cols;
        let right_pad = t / other.rows;
        check_size("stp", self.rows * left_pad, t)?;
        check_size("stp", t, other.cols * right_pad)?;
        check_size("stp", self.rows * left_pad, other.cols * right_pad)?;
        let a = self.kron(&Self::identity(left_pad))?;
        let b = other.kron(&Self::identity(right_pad))?;
        a.matmul(&b)
    }

    /// Row-reduced echelon form and its pivot columns. Float mode uses
    /// partial pivoting and treats entries below the tolerance as zero.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let candidate = match T::MODE {
                NumericMode::Rational => (r..m.rows).find(|&i| !m.get(i, c).is_zero()),
                NumericMode::Float => (r..m.rows)
                    .filter(|&i| !m.get(i, c).is_zero())
                    .max_by(|&i, &j| {
                        m.get(i, c)
                            .magnitude()
                            .partial_cmp(&m.get(j, c).magnitude())
                            .unwrap_or(std::cmp::Ordering::Equal)
                    }),
            };
            let Some(p) = candidate else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = T::one().div(m.get(r, c));
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            m.set(r, c, T::one());
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    if T::MODE == NumericMode::Float {
                        m.set(i, c, T::zero());
                    }
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
                m.set(i, c, T::zero());
            }
            pivots.push(c);
            r += 1;
        }
        if T::MODE == NumericMode::Float {
            for v in &mut m.data {
                if v.is_zero() {
                    *v = T::zero();
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

//! Boolean matrices (`+_B`, `×_B`, `∧`) and non-negative integer count
//! matrices for path counting.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![true; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != rows * cols {
            return Err(Error::dim(
                "BoolMatrix::new",
                format!("{} bits for {rows}x{cols}", bits.len()),
            ));
        }
        Ok(Self { rows, cols, bits })
    }

    /// From 0/1 integers, row-major. Anything other than 0 or 1 is rejected.
    pub fn from_01(rows: usize, cols: usize, v: &[u8]) -> Result<Self> {
        if let Some(bad) = v.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidArgument(format!("Boolean entry {bad} is not 0 or 1")));
        }
        Self::new(rows, cols, v.iter().map(|&b| b == 1).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn all(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn any(&self) -> bool {
        self.bits.iter().any(|&b| b)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `A +_B B`.
    pub fn or(&self, other: &Self) -> Result<Self> {
        self.zip(other, "boolean sum", |a, b| a || b)
    }

    /// `A ∧ B`.
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.zip(other, "boolean and", |a, b| a && b)
    }

    fn zip(&self, other: &Self, op: &'static str, f: impl Fn(bool, bool) -> bool) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dim(
                op,
                format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    /// `A ×_B B`: entry is 1 iff the ordinary product entry is positive.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim(
                "boolean product",
                format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if !self.get(i, k) {
                    continue;
                }
                for j in 0..other.cols {
                    if other.get(k, j) {
                        out.set(i, j, true);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Boolean power `A^(ℓ)` by repeated `×_B`; `ℓ = 0` gives the identity.
    pub fn power(&self, ell: usize) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::dim("boolean power", "matrix is not square"));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..ell {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn to_counts(&self) -> CountMatrix {
        CountMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.bits.iter().map(|&b| u128::from(b)).collect(),
        }
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: String = self.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Matrix of path counts under ordinary integer arithmetic. Overflow is an
/// error rather than a wrap.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u128>,
}

impl CountMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u128>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim("CountMatrix::new", "entry count does not match shape"));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u128 {
        self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim("count product", "inner dimensions differ"));
        }
        let mut data = vec![0u128; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cell = &mut data[i * other.cols + j];
                    *cell = a
                        .checked_mul(b)
                        .and_then(|p| cell.checked_add(p))
                        .ok_or(Error::Overflow("paths"))?;
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Plain integer power by repeated multiplication.
    pub fn power(&self, ell: usize) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::dim("count power", "matrix is not square"));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..ell {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Entrywise sign.
    pub fn support(&self) -> BoolMatrix {
        BoolMatrix {
            rows: self.rows,
            cols: self.cols,
            bits: self.data.iter().map(|&v| v > 0).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u128>> {
        self.data.chunks(self.cols.max(1)).map(<[u128]>::to_vec).collect()
    }
}

impl fmt::Debug for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

use crate::error::{Error, Result};
use crate::stp::{Matrix, Scalar};

/// One linear subsystem `x(t+1) = A x(t) + B u(t)`, `y(t) = C x(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mode<T: Scalar> {
    pub a: Matrix<T>,
    pub b: Matrix<T>,
    pub c: Matrix<T>,
}

impl<T: Scalar> Mode<T> {
    pub fn new(a: Matrix<T>, b: Matrix<T>, c: Matrix<T>) -> Self {
        Self { a, b, c }
    }
}

/// A switched linear system with `q` modes sharing dimensions `n`, `m`, `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchedLinearSystem<T: Scalar> {
    n: usize,
    m: usize,
    p: usize,
    modes: Vec<Mode<T>>,
}

impl<T: Scalar> SwitchedLinearSystem<T> {
    pub fn new(modes: Vec<Mode<T>>) -> Result<Self> {
        let first = modes
            .first()
            .ok_or_else(|| Error::InvalidSystem("at least one mode is required".into()))?;
        let n = first.a.rows();
        let m = first.b.cols();
        let p = first.c.rows();
        if n == 0 {
            return Err(Error::InvalidSystem("state dimension must be positive".into()));
        }
        for (i, mode) in modes.iter().enumerate() {
            let i = i + 1;
            if mode.a.shape() != (n, n) {
                return Err(Error::InvalidSystem(format!(
                    "A{i} is {:?}, expected {n}x{n}",
                    mode.a.shape()
                )));
            }
            if mode.b.shape() != (n, m) {
                return Err(Error::InvalidSystem(format!(
                    "B{i} is {:?}, expected {n}x{m}",
                    mode.b.shape()
                )));
            }
            if mode.c.shape() != (p, n) {
                return Err(Error::InvalidSystem(format!(
                    "C{i} is {:?}, expected {p}x{n}",
                    mode.c.shape()
                )));
            }
        }
        Ok(Self { n, m, p, modes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.modes.len()
    }

    pub fn modes(&self) -> &[Mode<T>] {
        &self.modes
    }

    /// Mode σ, 1-based.
    pub fn mode(&self, sigma: usize) -> Result<&Mode<T>> {
        sigma
            .checked_sub(1)
            .and_then(|i| self.modes.get(i))
            .ok_or(Error::IndexOutOfRange {
                what: "mode",
                index: sigma,
                max: self.q(),
            })
    }

    pub fn a(&self, sigma: usize) -> Result<&Matrix<T>> {
        Ok(&self.mode(sigma)?.a)
    }

    pub fn b(&self, sigma: usize) -> Result<&Matrix<T>> {
        Ok(&self.mode(sigma)?.b)
    }

    pub fn c(&self, sigma: usize) -> Result<&Matrix<T>> {
        Ok(&self.mode(sigma)?.c)
    }

    /// The dual system with modes `(Aᵀ, Cᵀ, Bᵀ)`.
    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            m: self.p,
            p: self.m,
            modes: self
                .modes
                .iter()
                .map(|md| Mode::new(md.a.transpose(), md.c.transpose(), md.b.transpose()))
                .collect(),
        }
    }

    /// `A_σ x + B_σ u`.
    pub fn step(&self, sigma: usize, x: &[T], u: &[T]) -> Result<Vec<T>> {
        let mode = self.mode(sigma)?;
        let ax = mode.a.mul_vec(x)?;
        let bu = mode.b.mul_vec(u)?;
        Ok(ax.iter().zip(&bu).map(|(a, b)| a.add(b)).collect())
    }

    /// `C_σ x`.
    pub fn output(&self, sigma: usize, x: &[T]) -> Result<Vec<T>> {
        self.mode(sigma)?.c.mul_vec(x)
    }

    /// `[A_1 A_2 … A_q]`.
    pub fn stacked_a(&self) -> Result<Matrix<T>> {
        Matrix::hcat(&self.modes.iter().map(|md| &md.a).collect::<Vec<_>>())
    }

    /// `[B_1 B_2 … B_q]`.
    pub fn stacked_b(&self) -> Result<Matrix<T>> {
        Matrix::hcat(&self.modes.iter().map(|md| &md.b).collect::<Vec<_>>())
    }
}

//! Merging the logical network and the linear modes into one system on
//! `z = θ ⊗ x`.
//!
//! `G = L [I_{MN} ⊗ (A R)] Φ_{MN}` with `A = [A_1 … A_q]`, and `H` likewise
//! from `B = [B_1 … B_q]`. `G = [G_1 … G_M]`; each `G_i` is an `N × N` grid
//! of `n × n` blocks with exactly one placed block per block column.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::logic::LogicalNetwork;
use crate::stp::{BoolMatrix, LogicalMatrix, Matrix, Scalar};

use super::system::SwitchedLinearSystem;

/// The block placed in block column β of `G_i` (and `H_i`).
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedBlock<T: Scalar> {
    /// Block row υ: the logical successor of (i, β).
    pub row: usize,
    /// Active mode σ at (i, β).
    pub signal: usize,
    pub g: Matrix<T>,
    pub h: Matrix<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MergedSystem<T: Scalar> {
    sls: SwitchedLinearSystem<T>,
    net: LogicalNetwork,
    // indexed by (i-1)·N + (β-1)
    placed: Vec<PlacedBlock<T>>,
    g: Matrix<T>,
    h: Matrix<T>,
}

/// Merged system of the dual modes `(Aᵀ, Cᵀ)`: `G̃`, `H̃`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualMergedSystem<T: Scalar>(MergedSystem<T>);

impl<T: Scalar> Deref for DualMergedSystem<T> {
    type Target = MergedSystem<T>;

    fn deref(&self) -> &MergedSystem<T> {
        &self.0
    }
}

impl<T: Scalar> DualMergedSystem<T> {
    pub fn merged(&self) -> &MergedSystem<T> {
        &self.0
    }
}

/// `L [I_{MN} ⊗ (stacked ⋉ R)] Φ_{MN}` evaluated with semi-tensor products.
pub fn closed_form<T: Scalar>(stacked: &Matrix<T>, net: &LogicalNetwork) -> Result<Matrix<T>> {
    let mn = net.input_state_count();
    let modes_times_signal = stacked.stp(&net.r().to_dense())?;
    let lifted = Matrix::identity(mn).kron(&modes_times_signal)?;
    let reduced = lifted.stp(&LogicalMatrix::power_reducing(mn)?.to_dense())?;
    net.l().to_dense().stp(&reduced)
}

/// Direct placement: `mode(σ)` at block (υ, β) of `G_i` for every (i, β).
fn place<T: Scalar>(
    net: &LogicalNetwork,
    block_rows: usize,
    block_cols: usize,
    mode: impl Fn(usize) -> Matrix<T>,
) -> Matrix<T> {
    let n_states = net.n_states();
    let mut out = Matrix::zeros(block_rows * n_states, block_cols * net.input_state_count());
    for col in 0..net.input_state_count() {
        let row = net.l().col_index()[col];
        let sigma = net.r().col_index()[col];
        out.set_block((row - 1) * block_rows, col * block_cols, &mode(sigma));
    }
    out
}

pub fn merge<T: Scalar>(sls: &SwitchedLinearSystem<T>, net: &LogicalNetwork) -> Result<MergedSystem<T>> {
    if net.q() != sls.q() {
        return Err(Error::InvalidArgument(format!(
            "network emits {} signals but the system has {} modes",
            net.q(),
            sls.q()
        )));
    }
    let (n, m) = (sls.n(), sls.m());
    let formula_g = closed_form(&sls.stacked_a()?, net)?;
    let formula_h = closed_form(&sls.stacked_b()?, net)?;
    let placed_g = place(net, n, n, |s| sls.modes()[s - 1].a.clone());
    let placed_h = place(net, n, m, |s| sls.modes()[s - 1].b.clone());
    if !formula_g.approx_eq(&placed_g) {
        return Err(Error::Inconsistent("closed-form G differs from block placement".into()));
    }
    if !formula_h.approx_eq(&placed_h) {
        return Err(Error::Inconsistent("closed-form H differs from block placement".into()));
    }
    let placed = (0..net.input_state_count())
        .map(|col| {
            let signal = net.r().col_index()[col];
            let mode = &sls.modes()[signal - 1];
            PlacedBlock {
                row: net.l().col_index()[col],
                signal,
                g: mode.a.clone(),
                h: mode.b.clone(),
            }
        })
        .collect();
    Ok(MergedSystem {
        sls: sls.clone(),
        net: net.clone(),
        placed,
        g: formula_g,
        h: formula_h,
    })
}

pub fn merge_dual<T: Scalar>(
    sls: &SwitchedLinearSystem<T>,
    net: &LogicalNetwork,
) -> Result<DualMergedSystem<T>> {
    merge(&sls.dual(), net).map(DualMergedSystem)
}

impl<T: Scalar> MergedSystem<T> {
    pub fn system(&self) -> &SwitchedLinearSystem<T> {
        &self.sls
    }

    pub fn network(&self) -> &LogicalNetwork {
        &self.net
    }

    pub fn n(&self) -> usize {
        self.sls.n()
    }

    /// Flat `G`, `nN × nMN`.
    pub fn g(&self) -> &Matrix<T> {
        &self.g
    }

    /// Flat `H`, `nN × mMN`.
    pub fn h(&self) -> &Matrix<T> {
        &self.h
    }

    /// `G_i`, `nN × nN`.
    pub fn g_input(&self, gamma: usize) -> Result<Matrix<T>> {
        self.net.check_input(gamma)?;
        let w = self.sls.n() * self.net.n_states();
        Ok(self.g.block(0, (gamma - 1) * w, self.g.rows(), w))
    }

    /// `H_i`, `nN × mN`.
    pub fn h_input(&self, gamma: usize) -> Result<Matrix<T>> {
        self.net.check_input(gamma)?;
        let w = self.sls.m() * self.net.n_states();
        Ok(self.h.block(0, (gamma - 1) * w, self.h.rows(), w))
    }

    /// The placed block of column β of `G_γ`.
    pub fn placed(&self, gamma: usize, beta: usize) -> Result<&PlacedBlock<T>> {
        let col = self.net.encode(gamma, beta)?;
        Ok(&self.placed[col - 1])
    }

    /// Block (α, β) of `G_γ`, zero unless α is the placed row.
    pub fn g_block(&self, gamma: usize, alpha: usize, beta: usize) -> Result<Matrix<T>> {
        self.net.check_state(alpha)?;
        let p = self.placed(gamma, beta)?;
        let n = self.sls.n();
        Ok(if p.row == alpha { p.g.clone() } else { Matrix::zeros(n, n) })
    }

    pub fn h_block(&self, gamma: usize, alpha: usize, beta: usize) -> Result<Matrix<T>> {
        self.net.check_state(alpha)?;
        let p = self.placed(gamma, beta)?;
        Ok(if p.row == alpha {
            p.h.clone()
        } else {
            Matrix::zeros(self.sls.n(), self.sls.m())
        })
    }

    /// `N × N` pattern of nonzero blocks of `G_γ`, read from the flat matrix.
    pub fn compressed_pattern(&self, gamma: usize) -> Result<BoolMatrix> {
        let gi = self.g_input(gamma)?;
        let (n, big_n) = (self.sls.n(), self.net.n_states());
        let mut pattern = BoolMatrix::zeros(big_n, big_n);
        for a in 0..big_n {
            for b in 0..big_n {
                pattern.set(a, b, !gi.block(a * n, b * n, n, n).is_zero());
            }
        }
        Ok(pattern)
    }

    /// One step of `z(t+1) = G_γ z(t) + H_γ (θ ⊗ u)` with `z = θ ⊗ x`.
    ///
    /// The successor θ is read from L rather than from `z(t+1)`, so a zero
    /// `x(t+1)` does not hide it.
    pub fn step_merged(&self, gamma: usize, theta: usize, x: &[T], u: &[T]) -> Result<(usize, Vec<T>)> {
        let (n, m) = (self.sls.n(), self.sls.m());
        if x.len() != n || u.len() != m {
            return Err(Error::dim(
                "step_merged",
                format!("x has {} entries (n = {n}), u has {} (m = {m})", x.len(), u.len()),
            ));
        }
        let theta_vec = Matrix::delta(self.net.n_states(), theta)?;
        let z = theta_vec.kron(&Matrix::column_vector(x.to_vec()))?;
        let tu = theta_vec.kron(&Matrix::column_vector(u.to_vec()))?;
        let next = self.g_input(gamma)?.matmul(&z)?.add(&self.h_input(gamma)?.matmul(&tu)?)?;
        let row = self.placed(gamma, theta)?.row;
        for a in 1..=self.net.n_states() {
            if a != row && !next.block((a - 1) * n, 0, n, 1).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "merged step has mass in block {a}, expected only block {row}"
                )));
            }
        }
        let x_next = next.block((row - 1) * n, 0, n, 1).data().to_vec();
        Ok((row, x_next))
    }
}

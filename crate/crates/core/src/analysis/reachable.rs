//! Reachable sets of the merged system and of its dual.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::LogicalNetwork;
use crate::model::{DualMergedSystem, MergedSystem};
use crate::stp::{Matrix, Scalar, Subspace};

/// Switching trajectory induced by a logical input sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    /// `σ_0 … σ_{T-1}`.
    pub sigmas: Vec<usize>,
    /// `θ_0 = α, θ_1 … θ_T`.
    pub thetas: Vec<usize>,
}

pub fn switching_trajectory(net: &LogicalNetwork, alpha: usize, gammas: &[usize]) -> Result<Trajectory> {
    net.check_state(alpha)?;
    let mut thetas = vec![alpha];
    let mut sigmas = Vec::with_capacity(gammas.len());
    for &g in gammas {
        let (next, sigma) = net.step(g, *thetas.last().expect("non-empty"))?;
        sigmas.push(sigma);
        thetas.push(next);
    }
    Ok(Trajectory { sigmas, thetas })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReachableSet<T: Scalar> {
    pub alpha: usize,
    pub gammas: Vec<usize>,
    /// One image per input-injection time.
    pub terms: Vec<Subspace<T>>,
    pub span: Subspace<T>,
    pub terminal_theta: usize,
}

fn check_sequence(gammas: &[usize]) -> Result<()> {
    if gammas.is_empty() {
        return Err(Error::InvalidArgument("logical input sequence must be non-empty".into()));
    }
    Ok(())
}

fn assemble<T: Scalar>(alpha: usize, gammas: &[usize], n: usize, terms: Vec<Matrix<T>>, terminal: usize) -> Result<ReachableSet<T>> {
    let terms: Vec<Subspace<T>> = terms.iter().map(Subspace::column_space).collect();
    let span = if terms.is_empty() {
        Subspace::zero(n)
    } else {
        Subspace::sum(terms.iter())?
    };
    Ok(ReachableSet {
        alpha,
        gammas: gammas.to_vec(),
        terms,
        span,
        terminal_theta: terminal,
    })
}

type BlockPair<'a, T> = (&'a Matrix<T>, &'a Matrix<T>);

/// Blocks `(G, H)` met along the trajectory of `gammas` from α.
fn blocks_along<'a, T: Scalar>(
    ms: &'a MergedSystem<T>,
    alpha: usize,
    gammas: &[usize],
) -> Result<(Vec<BlockPair<'a, T>>, usize)> {
    ms.network().check_state(alpha)?;
    let mut theta = alpha;
    let mut out = Vec::with_capacity(gammas.len());
    for &g in gammas {
        let p = ms.placed(g, theta)?;
        out.push((&p.g, &p.h));
        theta = p.row;
    }
    Ok((out, theta))
}

/// Reachable set of `x = 0` along `gammas` from logical state α: term t is
/// `Im(A_{σ_{T-1}} ⋯ A_{σ_{t+1}} B_{σ_t})`, read from the placed blocks.
pub fn reachable_set<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<ReachableSet<T>> {
    check_sequence(gammas)?;
    let (blocks, terminal) = blocks_along(ms, alpha, gammas)?;
    let mut terms = Vec::with_capacity(blocks.len());
    // Accumulate right to left: suffix = A_{σ_{T-1}} ⋯ A_{σ_{t+1}}.
    let mut suffix = Matrix::identity(ms.n());
    for &(g, h) in blocks.iter().rev() {
        terms.push(suffix.matmul(h)?);
        suffix = suffix.matmul(g)?;
    }
    terms.reverse();
    assemble(alpha, gammas, ms.n(), terms, terminal)
}

/// Same reachable set through flat semi-tensor products:
/// `1_Nᵀ ⋉ G_{γ_{T-1}} ⋯ G_{γ_{t+1}} H_{γ_t} L_{γ_{t-1}} ⋯ L_{γ_0} δ_N^α`.
pub fn reachable_set_flat<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<ReachableSet<T>> {
    check_sequence(gammas)?;
    let net = ms.network();
    let ones = Matrix::from_rows(vec![vec![T::one(); net.n_states()]])?;
    let mut logical = Matrix::delta(net.n_states(), alpha)?;
    let mut terms = Vec::with_capacity(gammas.len());
    for (t, &g) in gammas.iter().enumerate() {
        let mut x = ms.h_input(g)?.stp(&logical)?;
        for &later in &gammas[t + 1..] {
            x = ms.g_input(later)?.matmul(&x)?;
        }
        terms.push(ones.stp(&x)?);
        logical = net.l_block(g)?.to_dense().matmul(&logical)?;
    }
    let terminal = (0..net.n_states())
        .find(|&i| !logical.get(i, 0).is_zero())
        .map(|i| i + 1)
        .expect("logical vector has a one");
    assemble(alpha, gammas, ms.n(), terms, terminal)
}

/// `A_{σ_{T-1}} ⋯ A_{σ_0}`, the free motion over the horizon.
pub fn free_motion<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<Matrix<T>> {
    let (blocks, _) = blocks_along(ms, alpha, gammas)?;
    blocks
        .iter()
        .try_fold(Matrix::identity(ms.n()), |acc, &(g, _)| g.matmul(&acc))
}

/// `1_Nᵀ ⋉ G_{γ_{T-1}} ⋯ G_{γ_0} δ_N^α` through flat products.
pub fn free_motion_flat<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<Matrix<T>> {
    let n_states = ms.network().n_states();
    let mut x = Matrix::delta(n_states, alpha)?.kron(&Matrix::identity(ms.n()))?;
    for &g in gammas {
        x = ms.g_input(g)?.matmul(&x)?;
    }
    Matrix::from_rows(vec![vec![T::one(); n_states]])?.stp(&x)
}

/// Reachable set of the dual system: term t is
/// `Im(Ãσ_0 ⋯ Ãσ_{t-1} C̃σ_t)` with `Ã = Aᵀ`, `C̃ = Cᵀ`, so the logical
/// subscripts advance while the matrix products grow on the right.
/// Full span is the observability rank condition.
pub fn dual_reachable_set<T: Scalar>(
    dual: &DualMergedSystem<T>,
    alpha: usize,
    gammas: &[usize],
) -> Result<ReachableSet<T>> {
    check_sequence(gammas)?;
    let (blocks, terminal) = blocks_along(dual.merged(), alpha, gammas)?;
    let mut terms = Vec::with_capacity(blocks.len());
    let mut prefix = Matrix::identity(dual.n());
    for &(g, h) in &blocks {
        terms.push(prefix.matmul(h)?);
        prefix = prefix.matmul(g)?;
    }
    assemble(alpha, gammas, dual.n(), terms, terminal)
}

/// `Ãσ_0 ⋯ Ãσ_{T-1} = (A_{σ_{T-1}} ⋯ A_{σ_0})ᵀ`.
pub fn dual_free_motion<T: Scalar>(dual: &DualMergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<Matrix<T>> {
    let (blocks, _) = blocks_along(dual.merged(), alpha, gammas)?;
    blocks
        .iter()
        .try_fold(Matrix::identity(dual.n()), |acc, &(g, _)| acc.matmul(g))
}

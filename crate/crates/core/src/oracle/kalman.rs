use serde::{Deserialize, Serialize};

use super::{raw_step, EnumerationBudget};
use crate::error::{Error, Result};
use crate::logic::LogicalNetwork;
use crate::model::SwitchedLinearSystem;
use crate::property::Property;
use crate::stp::{Matrix, Scalar};

/// Every logical input sequence of length `t` from α, in lexicographic
/// order, with its induced switching sequence.
pub fn enumerate_switching_sequences(
    net: &LogicalNetwork,
    alpha: usize,
    t: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if alpha == 0 || alpha > net.n_states() {
        return Err(Error::IndexOutOfRange {
            what: "logical state",
            index: alpha,
            max: net.n_states(),
        });
    }
    budget.admit(net.n_inputs(), t)?;
    let mut out = Vec::new();
    let mut gammas = Vec::new();
    let mut sigmas = Vec::new();
    walk(net, alpha, t, &mut gammas, &mut sigmas, &mut out);
    Ok(out)
}

fn walk(
    net: &LogicalNetwork,
    theta: usize,
    left: usize,
    gammas: &mut Vec<usize>,
    sigmas: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    if left == 0 {
        out.push((gammas.clone(), sigmas.clone()));
        return;
    }
    for g in 1..=net.n_inputs() {
        let (next, s) = raw_step(net.l().col_index(), net.r().col_index(), net.n_states(), g, theta);
        gammas.push(g);
        sigmas.push(s);
        walk(net, next, left - 1, gammas, sigmas, out);
        gammas.pop();
        sigmas.pop();
    }
}

fn mode_a<T: Scalar>(sls: &SwitchedLinearSystem<T>, s: usize) -> &Matrix<T> {
    &sls.modes()[s - 1].a
}

/// `[B_{σ_{T-1}}, A_{σ_{T-1}} B_{σ_{T-2}}, …, A_{σ_{T-1}} ⋯ A_{σ_1} B_{σ_0}]`.
pub fn controllability_matrix<T: Scalar>(sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<Matrix<T>> {
    let mut blocks = Vec::new();
    let mut left = Matrix::identity(sls.n());
    for &s in sigmas.iter().rev() {
        blocks.push(left.matmul(&sls.modes()[s - 1].b)?);
        left = left.matmul(mode_a(sls, s))?;
    }
    Matrix::hcat(&blocks.iter().collect::<Vec<_>>())
}

/// `[C_{σ_0}; C_{σ_1} A_{σ_0}; …; C_{σ_{T-1}} A_{σ_{T-2}} ⋯ A_{σ_0}]`.
pub fn observability_matrix<T: Scalar>(sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<Matrix<T>> {
    let mut blocks = Vec::new();
    let mut right = Matrix::identity(sls.n());
    for &s in sigmas {
        blocks.push(sls.modes()[s - 1].c.matmul(&right)?);
        right = mode_a(sls, s).matmul(&right)?;
    }
    Matrix::vcat(&blocks.iter().collect::<Vec<_>>())
}

pub fn kalman_rank<T: Scalar>(sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<usize> {
    Ok(controllability_matrix(sigmas, sls)?.rank())
}

pub fn obsv_rank<T: Scalar>(sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<usize> {
    Ok(observability_matrix(sigmas, sls)?.rank())
}

fn transition<T: Scalar>(sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<Matrix<T>> {
    sigmas
        .iter()
        .try_fold(Matrix::identity(sls.n()), |acc, &s| mode_a(sls, s).matmul(&acc))
}

/// Classical test of one property along a fixed switching sequence.
fn classical<T: Scalar>(property: Property, sigmas: &[usize], sls: &SwitchedLinearSystem<T>) -> Result<bool> {
    let n = sls.n();
    Ok(match property {
        Property::Reachability => kalman_rank(sigmas, sls)? == n,
        Property::Controllability => {
            // Im(Φ) ⊆ Im(K) iff appending Φ does not raise the rank.
            let k = controllability_matrix(sigmas, sls)?;
            let phi = transition(sigmas, sls)?;
            Matrix::hcat(&[&k, &phi])?.rank() == k.rank()
        }
        Property::Observability => obsv_rank(sigmas, sls)? == n,
        Property::Reconstructibility => {
            // ker(O) ⊆ ker(Φ) iff stacking Φ under O does not raise the rank.
            let o = observability_matrix(sigmas, sls)?;
            let phi = transition(sigmas, sls)?;
            Matrix::vcat(&[&o, &phi])?.rank() == o.rank()
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub property: Property,
    pub holds: bool,
    /// Shortest horizon with a sequence that works from every α.
    pub shortest: Option<usize>,
    /// All such sequences at that horizon.
    pub passing: Vec<Vec<usize>>,
    pub alphas: Vec<usize>,
}

/// Exhaustive check of `property` over every logical input sequence of
/// length `1..=t_max`, with the switching sequence replayed from each α.
pub fn kalman_oracle<T: Scalar>(
    sls: &SwitchedLinearSystem<T>,
    net: &LogicalNetwork,
    property: Property,
    t_max: usize,
    alphas: &[usize],
    budget: &EnumerationBudget,
) -> Result<OracleVerdict> {
    if alphas.is_empty() {
        return Err(Error::InvalidArgument("oracle needs at least one initial state".into()));
    }
    for t in 1..=t_max {
        let per_alpha: Vec<Vec<(Vec<usize>, Vec<usize>)>> = alphas
            .iter()
            .map(|&a| enumerate_switching_sequences(net, a, t, budget))
            .collect::<Result<_>>()?;
        let mut passing = Vec::new();
        for idx in 0..per_alpha[0].len() {
            let mut ok = true;
            for runs in &per_alpha {
                if !classical(property, &runs[idx].1, sls)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                passing.push(per_alpha[0][idx].0.clone());
            }
        }
        if !passing.is_empty() {
            return Ok(OracleVerdict {
                property,
                holds: true,
                shortest: Some(t),
                passing,
                alphas: alphas.to_vec(),
            });
        }
    }
    Ok(OracleVerdict {
        property,
        holds: false,
        shortest: None,
        passing: Vec::new(),
        alphas: alphas.to_vec(),
    })
}

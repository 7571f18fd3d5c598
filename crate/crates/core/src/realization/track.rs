//! Tracking a finite reference switching signal.

use serde::{Deserialize, Serialize};

use super::fot::signal_preimages;
use crate::error::{Error, Result};
use crate::logic::{input_state_matrix, LogicalNetwork};
use crate::stp::BoolMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrackingProblem {
    pub theta0: usize,
    pub reference: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrackingReport {
    pub trackable: bool,
    /// First time step at which no input-state can emit the reference.
    pub first_failure: Option<usize>,
    pub witness: Option<Vec<usize>>,
    /// Logical states visited by the witness, `θ_0 … θ_τ`.
    pub states: Option<Vec<usize>>,
    /// Number of live input-states at each step.
    pub frontier_sizes: Vec<usize>,
}

fn members(v: &BoolMatrix) -> Vec<usize> {
    (0..v.rows()).filter(|&i| v.get(i, 0)).map(|i| i + 1).collect()
}

pub fn check_trackable(net: &LogicalNetwork, problem: &TrackingProblem) -> Result<TrackingReport> {
    net.check_state(problem.theta0)?;
    if problem.reference.is_empty() {
        return Err(Error::InvalidArgument("reference signal sequence is empty".into()));
    }
    for &s in &problem.reference {
        net.check_signal(s)?;
    }
    let total = net.input_state_count();
    let pre = signal_preimages(net);
    let big_l = input_state_matrix(net);

    // ϑ(0): every (γ, θ0) that emits σ_0.
    let mut start = BoolMatrix::zeros(total, 1);
    for gamma in 1..=net.n_inputs() {
        start.set(net.encode(gamma, problem.theta0)? - 1, 0, true);
    }
    let mut frontiers = vec![start.and(&pre[problem.reference[0] - 1].index_vector(total))?];
    let mut first_failure = None;
    if !frontiers[0].any() {
        first_failure = Some(0);
    } else {
        for (t, &sigma) in problem.reference.iter().enumerate().skip(1) {
            let next = big_l
                .product(frontiers.last().expect("non-empty"))?
                .and(&pre[sigma - 1].index_vector(total))?;
            let alive = next.any();
            frontiers.push(next);
            if !alive {
                first_failure = Some(t);
                break;
            }
        }
    }
    let frontier_sizes = frontiers.iter().map(|f| members(f).len()).collect();
    if first_failure.is_some() {
        return Ok(TrackingReport {
            trackable: false,
            first_failure,
            witness: None,
            states: None,
            frontier_sizes,
        });
    }

    // Back-chain: smallest live pair at τ, then the smallest live
    // predecessor whose successor state matches.
    let mut chosen = vec![members(frontiers.last().expect("non-empty"))[0]];
    for t in (0..frontiers.len() - 1).rev() {
        let (_, theta_next) = net.decode(*chosen.last().expect("non-empty"))?;
        let pred = members(&frontiers[t])
            .into_iter()
            .find(|&j| net.l().col_index()[j - 1] == theta_next)
            .ok_or_else(|| Error::Inconsistent(format!("no live predecessor at step {t}")))?;
        chosen.push(pred);
    }
    chosen.reverse();
    let decoded: Vec<(usize, usize)> = chosen.iter().map(|&c| net.decode(c)).collect::<Result<_>>()?;
    Ok(TrackingReport {
        trackable: true,
        first_failure: None,
        witness: Some(decoded.iter().map(|&(g, _)| g).collect()),
        states: Some(decoded.iter().map(|&(_, th)| th).collect()),
        frontier_sizes,
    })
}

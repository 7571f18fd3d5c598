//! Feasible logical input sequences: paths through the nonzero blocks of
//! `(G_1 + … + G_M)^k`, started at the selected control attractors and kept
//! when the reachable set is full from every one of them.

use serde::{Deserialize, Serialize};

use super::reachable::{reachable_set, switching_trajectory, Trajectory};
use super::verdict::AlphaSelection;
use crate::error::Result;
use crate::model::MergedSystem;
use crate::stp::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleSequence {
    pub gammas: Vec<usize>,
    /// `(α, trajectory from α)` for each start state.
    pub trajectories: Vec<(usize, Trajectory)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleSearch {
    pub starts: Vec<usize>,
    /// Length of the returned sequences; `None` if none up to `k_max`.
    pub length: Option<usize>,
    pub sequences: Vec<FeasibleSequence>,
}

// DFS over (input, state) paths from one start; each path is a distinct
// nonzero block product of the k-th power.
fn paths_from<T: Scalar>(ms: &MergedSystem<T>, theta: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
    if prefix.len() == k {
        out.push(prefix.clone());
        return Ok(());
    }
    for gamma in 1..=ms.network().n_inputs() {
        let next = ms.placed(gamma, theta)?.row;
        prefix.push(gamma);
        paths_from(ms, next, k, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

pub fn feasible_input_sequences<T: Scalar>(
    ms: &MergedSystem<T>,
    k_max: usize,
    starts: &AlphaSelection,
) -> Result<FeasibleSearch> {
    let starts = starts.resolve(ms.network())?;
    for k in 1..=k_max {
        let mut found = Vec::new();
        let mut candidates = Vec::new();
        if let Some(&first) = starts.first() {
            paths_from(ms, first, k, &mut Vec::new(), &mut candidates)?;
        }
        for gammas in candidates {
            let mut full = true;
            for &a in &starts {
                if !reachable_set(ms, a, &gammas)?.span.is_full() {
                    full = false;
                    break;
                }
            }
            if full {
                let trajectories = starts
                    .iter()
                    .map(|&a| Ok((a, switching_trajectory(ms.network(), a, &gammas)?)))
                    .collect::<Result<_>>()?;
                found.push(FeasibleSequence { gammas, trajectories });
            }
        }
        if !found.is_empty() {
            return Ok(FeasibleSearch {
                starts,
                length: Some(k),
                sequences: found,
            });
        }
    }
    Ok(FeasibleSearch {
        starts,
        length: None,
        sequences: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::network::tests::example_net;
    use crate::model::merge;
    use crate::model::system::tests::example_sls;

    #[test]
    fn example_feasible_set() {
        let ms = merge(&example_sls(), &example_net()).unwrap();
        let res = feasible_input_sequences(&ms, 3, &AlphaSelection::Attractors).unwrap();
        assert_eq!(res.starts, vec![4]);
        assert_eq!(res.length, Some(3));
        let seqs: Vec<_> = res.sequences.iter().map(|s| s.gammas.clone()).collect();
        assert_eq!(seqs, vec![vec![1, 2, 2], vec![2, 1, 1], vec![2, 1, 2], vec![2, 2, 1], vec![2, 2, 2]]);
        let (a, tr) = &res.sequences[4].trajectories[0];
        assert_eq!(*a, 4);
        assert_eq!(tr.sigmas, vec![1, 2, 2]);
    }

    #[test]
    fn short_horizon_finds_nothing() {
        let ms = merge(&example_sls(), &example_net()).unwrap();
        let res = feasible_input_sequences(&ms, 2, &AlphaSelection::Attractors).unwrap();
        assert!(res.sequences.is_empty());
        assert_eq!(res.length, None);
    }
}

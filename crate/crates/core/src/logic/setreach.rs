//! ℓ-step input-state set reachability.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::network::LogicalNetwork;
use crate::error::{Error, Result};
use crate::stp::{BoolMatrix, CountMatrix};

/// A non-empty set of encoded input-state pairs, each in `1..=M·N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InputStateSubset {
    members: BTreeSet<usize>,
}

impl InputStateSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::InvalidArgument("input-state subsets must be non-empty".into()));
        }
        if members.contains(&0) {
            return Err(Error::IndexOutOfRange {
                what: "input-state",
                index: 0,
                max: usize::MAX,
            });
        }
        Ok(Self { members })
    }

    pub fn singleton(index: usize) -> Result<Self> {
        Self::new([index])
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn check_range(&self, total: usize) -> Result<()> {
        match self.members.iter().next_back() {
            Some(&max) if max > total => Err(Error::IndexOutOfRange {
                what: "input-state",
                index: max,
                max: total,
            }),
            _ => Ok(()),
        }
    }

    /// V(Ω) ∈ B_{total×1}.
    pub fn index_vector(&self, total: usize) -> Result<BoolMatrix> {
        self.check_range(total)?;
        let mut v = BoolMatrix::zeros(total, 1);
        for &i in &self.members {
            v.set(i - 1, 0, true);
        }
        Ok(v)
    }
}

/// An ordered class of input-state subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetClass {
    subsets: Vec<InputStateSubset>,
}

impl SubsetClass {
    pub fn new(subsets: Vec<InputStateSubset>) -> Result<Self> {
        if subsets.is_empty() {
            return Err(Error::InvalidArgument("a subset class needs at least one subset".into()));
        }
        Ok(Self { subsets })
    }

    pub fn subsets(&self) -> &[InputStateSubset] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// P_Ω: the index vectors as columns, `total × |class|`.
    pub fn index_matrix(&self, total: usize) -> Result<BoolMatrix> {
        let mut p = BoolMatrix::zeros(total, self.subsets.len());
        for (j, s) in self.subsets.iter().enumerate() {
            s.check_range(total)?;
            for &i in s.members() {
                p.set(i - 1, j, true);
            }
        }
        Ok(p)
    }
}

/// The input-state matrix **L** = 1_M ⊗ L (L stacked M times), `MN × MN`.
///
/// Entry (i, j) is 1 iff input-state j moves to the state of input-state i,
/// the next input being free.
pub fn input_state_matrix(net: &LogicalNetwork) -> BoolMatrix {
    let n = net.n_states();
    let mn = net.input_state_count();
    let mut big = BoolMatrix::zeros(mn, mn);
    for (j, &target) in net.l().col_index().iter().enumerate() {
        for gamma in 0..net.n_inputs() {
            big.set(gamma * n + target - 1, j, true);
        }
    }
    big
}

/// Boolean C_ℓ = (P_Ω^d)^T ×_B **L**^(ℓ) ×_B P_Ω^0, shape `|Ω^d| × |Ω^0|`.
pub fn set_reachability(
    net: &LogicalNetwork,
    omega0: &SubsetClass,
    omega_d: &SubsetClass,
    ell: usize,
) -> Result<BoolMatrix> {
    if ell == 0 {
        return Err(Error::InvalidArgument("set reachability needs ℓ >= 1".into()));
    }
    let total = net.input_state_count();
    let p0 = omega0.index_matrix(total)?;
    let pd = omega_d.index_matrix(total)?;
    let power = input_state_matrix(net).power(ell)?;
    pd.transpose().product(&power)?.product(&p0)
}

/// Quantitative C̃_ℓ with ordinary integer arithmetic: entry (i, j) counts the
/// ℓ-edge input-state paths from Ω_j^0 into Ω_i^d.
pub fn set_reachability_counts(
    net: &LogicalNetwork,
    omega0: &SubsetClass,
    omega_d: &SubsetClass,
    ell: usize,
) -> Result<CountMatrix> {
    if ell == 0 {
        return Err(Error::InvalidArgument("set reachability needs ℓ >= 1".into()));
    }
    let total = net.input_state_count();
    let p0 = omega0.index_matrix(total)?.to_counts();
    let pd = omega_d.index_matrix(total)?.to_counts();
    let power = input_state_matrix(net).to_counts().power(ell)?;
    pd.transpose().product(&power)?.product(&p0)
}

/// Readout of a C_ℓ matrix: per pair, per source, per target and overall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetReachVerdicts {
    /// `pairs[i][j]`: reachable from Ω_j^0 to Ω_i^d.
    pub pairs: Vec<Vec<bool>>,
    /// Column j all ones: reachable at Ω_j^0.
    pub reachable_at: Vec<bool>,
    /// Row i all ones: Ω_i^d is globally reachable.
    pub globally_reachable: Vec<bool>,
    /// Every entry is one.
    pub fully_reachable: bool,
}

pub fn set_reachability_verdicts(c: &BoolMatrix) -> SetReachVerdicts {
    let pairs: Vec<Vec<bool>> = (0..c.rows()).map(|i| c.row(i).to_vec()).collect();
    SetReachVerdicts {
        reachable_at: (0..c.cols()).map(|j| c.column(j).iter().all(|&b| b)).collect(),
        globally_reachable: pairs.iter().map(|r| r.iter().all(|&b| b)).collect(),
        fully_reachable: c.all(),
        pairs,
    }
}

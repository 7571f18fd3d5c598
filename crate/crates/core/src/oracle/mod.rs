//! Brute-force reference implementations used to cross-check the
//! structured algorithms.
//!
//! Everything here reads only the raw column indices of L and R and the
//! mode matrices, and uses nothing from the rest of the crate beyond matrix
//! products and ranks. Algorithms are deliberately naive.

mod kalman;
mod logic;

pub use kalman::{
    controllability_matrix, enumerate_switching_sequences, kalman_oracle, kalman_rank,
    observability_matrix, obsv_rank, OracleVerdict,
};
pub use logic::{
    brute_attractor_states, brute_basin, brute_cycles, brute_fixed_points, brute_fot_failures,
    brute_one_step_universal, brute_track, count_paths,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    pub max_sequences: u128,
    pub max_horizon: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_sequences: 1_000_000,
            max_horizon: 64,
        }
    }
}

impl EnumerationBudget {
    /// Fails unless `branching^horizon` sequences fit in the budget.
    pub fn admit(&self, branching: usize, horizon: usize) -> Result<()> {
        let mut needed: u128 = 1;
        for _ in 0..horizon {
            needed = needed.saturating_mul(branching as u128);
        }
        if horizon > self.max_horizon || needed > self.max_sequences {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.max_sequences,
            });
        }
        Ok(())
    }
}

/// Raw replay of one step from L and R column indices.
fn raw_step(l: &[usize], r: &[usize], n_states: usize, gamma: usize, theta: usize) -> (usize, usize) {
    let col = (gamma - 1) * n_states + theta - 1;
    (l[col], r[col])
}

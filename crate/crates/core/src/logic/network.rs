use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stp::LogicalMatrix;

/// A k-valued logical control network in algebraic form:
/// `θ(t+1) = L ⋉ γ(t) ⋉ θ(t)`, `σ(t) = R ⋉ γ(t) ⋉ θ(t)`.
///
/// States are `1..=N`, inputs `1..=M`, signals `1..=q`. The input-state pair
/// `(γ, θ)` is encoded as `(γ-1)·N + θ`, the index of `δ_M^γ ⋉ δ_N^θ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicalNetwork {
    k: usize,
    state_nodes: usize,
    input_nodes: usize,
    n_states: usize,
    n_inputs: usize,
    l: LogicalMatrix,
    r: LogicalMatrix,
}

fn checked_pow(k: usize, e: usize, what: &str) -> Result<usize> {
    u32::try_from(e)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .ok_or_else(|| Error::InvalidNetwork(format!("{what} count {k}^{e} overflows")))
}

impl LogicalNetwork {
    pub fn new(
        k: usize,
        state_nodes: usize,
        input_nodes: usize,
        l: LogicalMatrix,
        r: LogicalMatrix,
    ) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidNetwork(format!("value count k = {k}, need k >= 2")));
        }
        if state_nodes == 0 {
            return Err(Error::InvalidNetwork("at least one state node is required".into()));
        }
        let n = checked_pow(k, state_nodes, "state")?;
        let m = checked_pow(k, input_nodes, "input")?;
        let mn = n
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidNetwork("input-state count overflows".into()))?;
        if l.rows() != n {
            return Err(Error::InvalidNetwork(format!("L has {} rows, expected N = {n}", l.rows())));
        }
        if l.cols() != mn {
            return Err(Error::InvalidNetwork(format!(
                "L has {} columns, expected M·N = {mn}",
                l.cols()
            )));
        }
        if r.cols() != mn {
            return Err(Error::InvalidNetwork(format!(
                "R has {} columns, expected M·N = {mn}",
                r.cols()
            )));
        }
        Ok(Self {
            k,
            state_nodes,
            input_nodes,
            n_states: n,
            n_inputs: m,
            l,
            r,
        })
    }

    /// Convenience constructor from column-index lists.
    pub fn from_columns(
        k: usize,
        state_nodes: usize,
        input_nodes: usize,
        q: usize,
        l_cols: Vec<usize>,
        r_cols: Vec<usize>,
    ) -> Result<Self> {
        let n = checked_pow(k, state_nodes, "state")?;
        Self::new(
            k,
            state_nodes,
            input_nodes,
            LogicalMatrix::new(n, l_cols)?,
            LogicalMatrix::new(q, r_cols)?,
        )
    }

    /// Builds `L = M_1 * M_2 * … * M_n` (Khatri-Rao) from one truth table per
    /// state node. Table entry `j` (0-based) is the node's next value in
    /// `1..=k` for input-state column `j + 1`, i.e. the structure matrix of
    /// the node's update function.
    pub fn from_truth_tables(
        k: usize,
        input_nodes: usize,
        tables: &[Vec<usize>],
        r: LogicalMatrix,
    ) -> Result<Self> {
        let state_nodes = tables.len();
        if state_nodes == 0 {
            return Err(Error::InvalidNetwork("no truth tables given".into()));
        }
        let width = checked_pow(k, state_nodes + input_nodes, "input-state")?;
        let mut structure: Option<LogicalMatrix> = None;
        for (node, table) in tables.iter().enumerate() {
            if table.len() != width {
                return Err(Error::InvalidNetwork(format!(
                    "truth table of node {} has {} entries, expected k^(m+n) = {width}",
                    node + 1,
                    table.len()
                )));
            }
            let m_i = LogicalMatrix::new(k, table.clone()).map_err(|_| {
                Error::InvalidNetwork(format!("truth table of node {} has a value outside 1..={k}", node + 1))
            })?;
            structure = Some(match structure {
                None => m_i,
                Some(acc) => acc.khatri_rao(&m_i)?,
            });
        }
        let l = structure.expect("at least one table");
        Self::new(k, state_nodes, input_nodes, l, r)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn state_nodes(&self) -> usize {
        self.state_nodes
    }

    pub fn input_nodes(&self) -> usize {
        self.input_nodes
    }

    /// N = k^n.
    pub fn n_states(&self) -> usize {
        self.n_states
    }

    /// M = k^m.
    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    /// Number of switching-signal values.
    pub fn q(&self) -> usize {
        self.r.rows()
    }

    pub fn input_state_count(&self) -> usize {
        self.n_states * self.n_inputs
    }

    pub fn l(&self) -> &LogicalMatrix {
        &self.l
    }

    pub fn r(&self) -> &LogicalMatrix {
        &self.r
    }

    /// `L_γ`, the N×N block of `L` for input γ.
    pub fn l_block(&self, gamma: usize) -> Result<LogicalMatrix> {
        self.check_input(gamma)?;
        self.l.column_block(gamma, self.n_states)
    }

    pub fn check_input(&self, gamma: usize) -> Result<()> {
        if gamma == 0 || gamma > self.n_inputs {
            return Err(Error::IndexOutOfRange {
                what: "logical input",
                index: gamma,
                max: self.n_inputs,
            });
        }
        Ok(())
    }

    pub fn check_state(&self, theta: usize) -> Result<()> {
        if theta == 0 || theta > self.n_states {
            return Err(Error::IndexOutOfRange {
                what: "logical state",
                index: theta,
                max: self.n_states,
            });
        }
        Ok(())
    }

    pub fn check_signal(&self, sigma: usize) -> Result<()> {
        if sigma == 0 || sigma > self.q() {
            return Err(Error::IndexOutOfRange {
                what: "switching signal",
                index: sigma,
                max: self.q(),
            });
        }
        Ok(())
    }

    /// `(γ, θ) ↦ (γ-1)·N + θ`.
    pub fn encode(&self, gamma: usize, theta: usize) -> Result<usize> {
        self.check_input(gamma)?;
        self.check_state(theta)?;
        Ok((gamma - 1) * self.n_states + theta)
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, index: usize) -> Result<(usize, usize)> {
        if index == 0 || index > self.input_state_count() {
            return Err(Error::IndexOutOfRange {
                what: "input-state",
                index,
                max: self.input_state_count(),
            });
        }
        Ok(((index - 1) / self.n_states + 1, (index - 1) % self.n_states + 1))
    }

    /// One step of the network: `(θ', σ)` for input γ at state θ.
    pub fn step(&self, gamma: usize, theta: usize) -> Result<(usize, usize)> {
        let col = self.encode(gamma, theta)?;
        Ok((self.l.col_index()[col - 1], self.r.col_index()[col - 1]))
    }

    /// Distinct one-step successors of θ with the smallest input reaching each.
    pub fn successors(&self, theta: usize) -> Result<Vec<(usize, usize)>> {
        self.check_state(theta)?;
        let mut out: Vec<(usize, usize)> = Vec::new();
        for gamma in 1..=self.n_inputs {
            let (next, _) = self.step(gamma, theta)?;
            if !out.iter().any(|&(t, _)| t == next) {
                out.push((next, gamma));
            }
        }
        Ok(out)
    }

    /// Node values (each in `1..=k`) of an overall state, first node most
    /// significant.
    pub fn state_digits(&self, theta: usize) -> Result<Vec<usize>> {
        self.check_state(theta)?;
        Ok(digits(theta - 1, self.k, self.state_nodes))
    }

    pub fn input_digits(&self, gamma: usize) -> Result<Vec<usize>> {
        self.check_input(gamma)?;
        Ok(digits(gamma - 1, self.k, self.input_nodes))
    }
}

fn digits(mut v: usize, k: usize, count: usize) -> Vec<usize> {
    let mut out = vec![1; count];
    for slot in out.iter_mut().rev() {
        *slot = v % k + 1;
        v /= k;
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn example_net() -> LogicalNetwork {
        LogicalNetwork::from_columns(2, 2, 1, 2, vec![1, 1, 2, 4, 4, 4, 3, 3], vec![2, 2, 1, 1, 1, 2, 2, 1])
            .unwrap()
    }

    #[test]
    fn steps_match_columns() {
        let net = example_net();
        assert_eq!(net.step(1, 3).unwrap(), (2, 1));
        assert_eq!(net.step(2, 4).unwrap(), (3, 1));
        assert!(net.step(3, 1).is_err());
        assert!(net.step(1, 5).is_err());
    }

    #[test]
    fn copy_input_network() {
        // θ(t+1) = γ(t) over Booleans, columns ordered (γ, θ).
        let r = LogicalMatrix::new(1, vec![1; 4]).unwrap();
        let net = LogicalNetwork::from_truth_tables(2, 1, &[vec![1, 1, 2, 2]], r).unwrap();
        assert_eq!(net.l().col_index(), &[1, 1, 2, 2]);
    }

    #[test]
    fn negation_network() {
        let r = LogicalMatrix::new(1, vec![1; 2]).unwrap();
        let net = LogicalNetwork::from_truth_tables(2, 0, &[vec![2, 1]], r).unwrap();
        assert_eq!(net.l().col_index(), &[2, 1]);
        assert_eq!(net.n_inputs(), 1);
    }

    #[test]
    fn malformed_tables() {
        let r = LogicalMatrix::new(1, vec![1; 4]).unwrap();
        assert!(LogicalNetwork::from_truth_tables(2, 1, &[vec![1, 1, 2]], r.clone()).is_err());
        assert!(LogicalNetwork::from_truth_tables(2, 1, &[vec![1, 1, 2, 3]], r).is_err());
    }

    #[test]
    fn dimension_validation() {
        assert!(LogicalNetwork::from_columns(2, 2, 1, 2, vec![1; 7], vec![1; 8]).is_err());
        assert!(LogicalNetwork::from_columns(2, 2, 1, 2, vec![1; 8], vec![3; 8]).is_err());
        assert!(LogicalNetwork::from_columns(1, 2, 1, 2, vec![1; 8], vec![1; 8]).is_err());
    }

    #[test]
    fn encode_decode() {
        let net = example_net();
        for idx in 1..=8 {
            let (g, t) = net.decode(idx).unwrap();
            assert_eq!(net.encode(g, t).unwrap(), idx);
        }
        assert_eq!(net.state_digits(3).unwrap(), vec![2, 1]);
        assert_eq!(net.input_digits(2).unwrap(), vec![2]);
    }
}

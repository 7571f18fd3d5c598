//! Fixed operating times and minimum dwell times of the linear modes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{input_state_matrix, LogicalNetwork};
use crate::stp::BoolMatrix;

/// Input-state pairs whose emitted signal is σ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignalPreimage {
    pub sigma: usize,
    pub members: Vec<usize>,
}

impl SignalPreimage {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index vector of the preimage, `MN × 1`.
    pub fn index_vector(&self, total: usize) -> BoolMatrix {
        let mut v = BoolMatrix::zeros(total, 1);
        for &i in &self.members {
            v.set(i - 1, 0, true);
        }
        v
    }

    /// Index vector of the complement `Δ_MN \ O_σ`.
    pub fn complement_vector(&self, total: usize) -> BoolMatrix {
        let mut v = BoolMatrix::ones(total, 1);
        for &i in &self.members {
            v.set(i - 1, 0, false);
        }
        v
    }

    /// Index matrix of the singleton class: column j is member j.
    pub fn singleton_matrix(&self, total: usize) -> BoolMatrix {
        let mut p = BoolMatrix::zeros(total, self.members.len());
        for (j, &i) in self.members.iter().enumerate() {
            p.set(i - 1, j, true);
        }
        p
    }
}

/// Partition of `1..=MN` by the signal column of R.
pub fn signal_preimages(net: &LogicalNetwork) -> Vec<SignalPreimage> {
    let mut out: Vec<SignalPreimage> = (1..=net.q())
        .map(|sigma| SignalPreimage {
            sigma,
            members: Vec::new(),
        })
        .collect();
    for (j, &sigma) in net.r().col_index().iter().enumerate() {
        out[sigma - 1].members.push(j + 1);
    }
    out
}

/// True iff every state reaches every state in one step under some input.
pub fn check_one_step_universal(net: &LogicalNetwork) -> bool {
    (1..=net.n_states()).all(|theta| {
        let hit = net.successors(theta).expect("state in range");
        hit.len() == net.n_states()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Duration {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Duration::Finite(d) => write!(f, "{d}"),
            Duration::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Duration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Duration::Infinite),
            t => match t.parse::<usize>() {
                Ok(d) if d >= 1 => Ok(Duration::Finite(d)),
                _ => Err(Error::InvalidArgument(format!("duration '{t}' is not a positive integer or 'inf'"))),
            },
        }
    }
}

/// Which line(s) of the one-step condition a duration requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FotClass {
    /// `d = 1`: must be able to leave.
    Leave,
    /// `1 < d < ∞`: must be able to leave and to stay.
    LeaveAndStay,
    /// `d = ∞`: must be able to stay.
    Stay,
}

impl FotClass {
    fn of(d: Duration) -> Self {
        match d {
            Duration::Finite(1) => FotClass::Leave,
            Duration::Finite(_) => FotClass::LeaveAndStay,
            Duration::Infinite => FotClass::Stay,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FotSpec {
    durations: Vec<Duration>,
}

impl FotSpec {
    pub fn new(durations: Vec<Duration>) -> Result<Self> {
        if durations.contains(&Duration::Finite(0)) {
            return Err(Error::InvalidArgument("operating times must be at least 1".into()));
        }
        Ok(Self { durations })
    }

    pub fn durations(&self) -> &[Duration] {
        &self.durations
    }
}

/// One line of the condition: holds iff no singleton fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub holds: bool,
    /// Input-state pairs from which the required move is impossible.
    pub failing: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignalCheck {
    pub sigma: usize,
    pub class: FotClass,
    pub members: Vec<usize>,
    pub leave: Option<ConditionCheck>,
    pub stay: Option<ConditionCheck>,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub realizable: bool,
    pub signals: Vec<SignalCheck>,
    pub warnings: Vec<String>,
}

/// `targetᵀ ×_B **L** ×_B P_singletons`, a `1 × |O_σ|` row; zero entries
/// name the failing singletons.
fn one_step_row(big_l: &BoolMatrix, target: &BoolMatrix, pre: &SignalPreimage, total: usize) -> Result<ConditionCheck> {
    let row = target
        .transpose()
        .product(big_l)?
        .product(&pre.singleton_matrix(total))?;
    let failing: Vec<usize> = pre
        .members
        .iter()
        .enumerate()
        .filter(|&(j, _)| !row.get(0, j))
        .map(|(_, &m)| m)
        .collect();
    Ok(ConditionCheck {
        holds: failing.is_empty(),
        failing,
    })
}

fn check_classes(net: &LogicalNetwork, classes: &[FotClass]) -> Result<RealizationReport> {
    if classes.len() != net.q() {
        return Err(Error::InvalidArgument(format!(
            "{} durations given for {} signals",
            classes.len(),
            net.q()
        )));
    }
    let total = net.input_state_count();
    let big_l = input_state_matrix(net);
    let mut signals = Vec::new();
    let mut warnings = Vec::new();
    for (pre, &class) in signal_preimages(net).iter().zip(classes) {
        if pre.is_empty() {
            warnings.push(format!("signal {} is never produced by R", pre.sigma));
        }
        let leave = match class {
            FotClass::Leave | FotClass::LeaveAndStay => {
                Some(one_step_row(&big_l, &pre.complement_vector(total), pre, total)?)
            }
            FotClass::Stay => None,
        };
        let stay = match class {
            FotClass::Stay | FotClass::LeaveAndStay => Some(one_step_row(&big_l, &pre.index_vector(total), pre, total)?),
            FotClass::Leave => None,
        };
        let satisfied = leave.iter().chain(stay.iter()).all(|c| c.holds);
        signals.push(SignalCheck {
            sigma: pre.sigma,
            class,
            members: pre.members.clone(),
            leave,
            stay,
            satisfied,
        });
    }
    Ok(RealizationReport {
        realizable: signals.iter().all(|s| s.satisfied),
        signals,
        warnings,
    })
}

pub fn check_fot_realizable(net: &LogicalNetwork, spec: &FotSpec) -> Result<RealizationReport> {
    let classes: Vec<FotClass> = spec.durations().iter().map(|&d| FotClass::of(d)).collect();
    check_classes(net, &classes)
}

/// Minimum dwell times are realizable iff every signal can both leave and
/// stay from each of its input-state pairs; the dwell values themselves do
/// not enter the condition.
pub fn check_dwell_time_realizable(net: &LogicalNetwork, min_dwell: &[usize]) -> Result<RealizationReport> {
    if min_dwell.contains(&0) {
        return Err(Error::InvalidArgument("dwell times must be at least 1".into()));
    }
    check_classes(net, &vec![FotClass::LeaveAndStay; min_dwell.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::network::tests::example_net;

    #[test]
    fn example_preimages() {
        let pre = signal_preimages(&example_net());
        assert_eq!(pre[0].members, vec![3, 4, 5, 8]);
        assert_eq!(pre[1].members, vec![1, 2, 6, 7]);
    }

    #[test]
    fn one_step_universal_cases() {
        let net = LogicalNetwork::from_columns(2, 1, 1, 1, vec![1, 2, 2, 1], vec![1; 4]).unwrap();
        assert!(check_one_step_universal(&net));
        assert!(!check_one_step_universal(&example_net()));
        let id = LogicalNetwork::from_columns(2, 2, 0, 1, vec![1, 2, 3, 4], vec![1; 4]).unwrap();
        assert!(!check_one_step_universal(&id));
    }

    #[test]
    fn example_dwell_two() {
        let net = example_net();
        let rep = check_fot_realizable(&net, &FotSpec::new(vec![Duration::Finite(2); 2]).unwrap()).unwrap();
        assert_eq!(rep.signals.len(), 2);
        // Pairs 4 and 5 move to state 4, whose pairs 4 and 8 both emit 1.
        assert_eq!(rep.signals[0].leave.as_ref().unwrap().failing, vec![4, 5]);
        // Pair 3 moves to state 2, whose pairs 2 and 6 both emit 2.
        assert_eq!(rep.signals[0].stay.as_ref().unwrap().failing, vec![3]);
        assert!(!rep.realizable);
        let dwell = check_dwell_time_realizable(&net, &[3, 5]).unwrap();
        assert_eq!(dwell, rep);
    }

    #[test]
    fn trapped_signal_cannot_leave() {
        // Signal follows the state; state 1 can be left for 2, which is absorbing.
        let net = LogicalNetwork::from_columns(2, 1, 1, 2, vec![2, 2, 2, 2], vec![1, 2, 1, 2]).unwrap();
        let rep = check_fot_realizable(&net, &FotSpec::new(vec![Duration::Finite(1), Duration::Infinite]).unwrap()).unwrap();
        assert!(rep.realizable, "{rep:?}");
        let trapped = LogicalNetwork::from_columns(2, 1, 1, 2, vec![1, 1, 1, 1], vec![1, 1, 1, 1]).unwrap();
        let rep = check_fot_realizable(&trapped, &FotSpec::new(vec![Duration::Finite(1), Duration::Infinite]).unwrap()).unwrap();
        assert!(!rep.realizable);
        assert_eq!(rep.signals[0].leave.as_ref().unwrap().failing, vec![1, 2, 3, 4]);
        assert_eq!(rep.warnings, vec!["signal 2 is never produced by R".to_string()]);
        assert!(rep.signals[1].satisfied);
    }

    #[test]
    fn duration_parsing() {
        assert_eq!("inf".parse::<Duration>().unwrap(), Duration::Infinite);
        assert_eq!("3".parse::<Duration>().unwrap(), Duration::Finite(3));
        assert!("0".parse::<Duration>().is_err());
        assert!(FotSpec::new(vec![Duration::Finite(0)]).is_err());
    }
}

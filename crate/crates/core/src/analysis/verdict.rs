//! The four control properties, decided by searching logical input
//! sequences breadth-first in the horizon and lexicographically within it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::reachable::{dual_free_motion, dual_reachable_set, free_motion, reachable_set};
use crate::error::{Error, Result};
use crate::logic::{control_attractors, LogicalNetwork};
use crate::model::{DualMergedSystem, MergedSystem};
use crate::stp::{Matrix, Scalar, Subspace};
pub use crate::property::Property;

/// Default cap on the number of (sequence, horizon) candidates a search may try.
pub const DEFAULT_SEARCH_BUDGET: u128 = 1_000_000;

/// Which initial logical states a sequence must work from.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaSelection {
    /// Representatives of the control attractors, whose basins cover every state.
    #[default]
    Attractors,
    /// Every logical state.
    All,
    Explicit(Vec<usize>),
}

impl AlphaSelection {
    pub fn resolve(&self, net: &LogicalNetwork) -> Result<Vec<usize>> {
        match self {
            AlphaSelection::Attractors => Ok(control_attractors(net).representatives),
            AlphaSelection::All => Ok((1..=net.n_states()).collect()),
            AlphaSelection::Explicit(v) => {
                if v.is_empty() {
                    return Err(Error::InvalidArgument("no initial logical states given".into()));
                }
                for &a in v {
                    net.check_state(a)?;
                }
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                Ok(v)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Longest horizon tried; `None` means the state dimension n.
    pub t_max: Option<usize>,
    pub alphas: AlphaSelection,
    pub budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            t_max: None,
            alphas: AlphaSelection::Attractors,
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl SearchOptions {
    pub fn with_t_max(mut self, t_max: usize) -> Self {
        self.t_max = Some(t_max);
        self
    }

    pub fn with_alphas(mut self, alphas: AlphaSelection) -> Self {
        self.alphas = alphas;
        self
    }
}

/// Outcome of one (sequence, α) evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaDetail {
    /// Rank of the (dual) reachable-set span.
    pub span_rank: usize,
    /// Containment of the free-motion image, for controllability and
    /// reconstructibility.
    pub contained: Option<bool>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    /// First working sequence (shortest, then lexicographic).
    pub witness: Option<Vec<usize>>,
    /// Witness length, or the largest horizon searched.
    pub horizon: usize,
    /// For a witness, its evaluation at each α; otherwise the best span
    /// rank seen per α and whether any sequence worked for that α alone.
    pub per_alpha: BTreeMap<usize, AlphaDetail>,
    pub checked_alphas: Vec<usize>,
    pub sequences_tried: u128,
}

/// All γ-tuples of length `len` over `1..=m` in lexicographic order.
pub fn lexicographic_sequences(m: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = u32::try_from(len).ok().and_then(|l| m.checked_pow(l)).unwrap_or(usize::MAX);
    (0..total).map(move |mut idx| {
        let mut seq = vec![1; len];
        for slot in seq.iter_mut().rev() {
            *slot = idx % m + 1;
            idx /= m;
        }
        seq
    })
}

fn count_candidates(m: usize, t_max: usize) -> u128 {
    (1..=t_max)
        .map(|t| (m as u128).checked_pow(t as u32).unwrap_or(u128::MAX))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

fn full_span<T: Scalar>(span: Subspace<T>) -> AlphaDetail {
    AlphaDetail {
        span_rank: span.rank(),
        contained: None,
        holds: span.is_full(),
    }
}

fn containment<T: Scalar>(span: Subspace<T>, free: &Matrix<T>) -> Result<AlphaDetail> {
    let inside = span.contains(&Subspace::column_space(free))?;
    Ok(AlphaDetail {
        span_rank: span.rank(),
        contained: Some(inside),
        holds: inside,
    })
}

fn eval_reachability<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<AlphaDetail> {
    Ok(full_span(reachable_set(ms, alpha, gammas)?.span))
}

fn eval_controllability<T: Scalar>(ms: &MergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<AlphaDetail> {
    containment(reachable_set(ms, alpha, gammas)?.span, &free_motion(ms, alpha, gammas)?)
}

fn eval_observability<T: Scalar>(dual: &DualMergedSystem<T>, alpha: usize, gammas: &[usize]) -> Result<AlphaDetail> {
    Ok(full_span(dual_reachable_set(dual, alpha, gammas)?.span))
}

fn eval_reconstructibility<T: Scalar>(
    dual: &DualMergedSystem<T>,
    alpha: usize,
    gammas: &[usize],
) -> Result<AlphaDetail> {
    containment(
        dual_reachable_set(dual, alpha, gammas)?.span,
        &dual_free_motion(dual, alpha, gammas)?,
    )
}

/// Evaluates one property for one (α, sequence).
pub fn evaluate<T: Scalar>(
    ms: &MergedSystem<T>,
    dual: &DualMergedSystem<T>,
    property: Property,
    alpha: usize,
    gammas: &[usize],
) -> Result<AlphaDetail> {
    match property {
        Property::Reachability => eval_reachability(ms, alpha, gammas),
        Property::Controllability => eval_controllability(ms, alpha, gammas),
        Property::Observability => eval_observability(dual, alpha, gammas),
        Property::Reconstructibility => eval_reconstructibility(dual, alpha, gammas),
    }
}

fn search(
    net: &LogicalNetwork,
    property: Property,
    n: usize,
    opts: &SearchOptions,
    eval: impl Fn(usize, &[usize]) -> Result<AlphaDetail>,
) -> Result<PropertyVerdict> {
    let alphas = opts.alphas.resolve(net)?;
    let t_max = opts.t_max.unwrap_or(n);
    if t_max == 0 {
        return Err(Error::InvalidArgument("horizon T_max must be at least 1".into()));
    }
    let needed = count_candidates(net.n_inputs(), t_max);
    if needed > opts.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    let mut best: BTreeMap<usize, AlphaDetail> = BTreeMap::new();
    let mut tried = 0u128;
    for t in 1..=t_max {
        for seq in lexicographic_sequences(net.n_inputs(), t) {
            tried += 1;
            let mut details = BTreeMap::new();
            let mut all = true;
            for &a in &alphas {
                let d = eval(a, &seq)?;
                let entry = best.entry(a).or_insert_with(|| d.clone());
                entry.span_rank = entry.span_rank.max(d.span_rank);
                entry.holds |= d.holds;
                if entry.contained != Some(true) && d.contained.is_some() {
                    entry.contained = d.contained;
                }
                all &= d.holds;
                details.insert(a, d);
            }
            if all {
                return Ok(PropertyVerdict {
                    property,
                    holds: true,
                    witness: Some(seq),
                    horizon: t,
                    per_alpha: details,
                    checked_alphas: alphas,
                    sequences_tried: tried,
                });
            }
        }
    }
    Ok(PropertyVerdict {
        property,
        holds: false,
        witness: None,
        horizon: t_max,
        per_alpha: best,
        checked_alphas: alphas,
        sequences_tried: tried,
    })
}

pub fn check_property<T: Scalar>(
    ms: &MergedSystem<T>,
    dual: &DualMergedSystem<T>,
    property: Property,
    opts: &SearchOptions,
) -> Result<PropertyVerdict> {
    search(ms.network(), property, ms.n(), opts, |a, seq| evaluate(ms, dual, property, a, seq))
}

/// Every sequence of exactly length `t` that works from all selected α.
pub fn passing_sequences<T: Scalar>(
    ms: &MergedSystem<T>,
    dual: &DualMergedSystem<T>,
    property: Property,
    t: usize,
    alphas: &AlphaSelection,
) -> Result<Vec<Vec<usize>>> {
    let alphas = alphas.resolve(ms.network())?;
    let mut out = Vec::new();
    for seq in lexicographic_sequences(ms.network().n_inputs(), t) {
        let mut ok = true;
        for &a in &alphas {
            if !evaluate(ms, dual, property, a, &seq)?.holds {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(seq);
        }
    }
    Ok(out)
}

pub fn check_reachability<T: Scalar>(ms: &MergedSystem<T>, opts: &SearchOptions) -> Result<PropertyVerdict> {
    search(ms.network(), Property::Reachability, ms.n(), opts, |a, seq| eval_reachability(ms, a, seq))
}

pub fn check_controllability<T: Scalar>(ms: &MergedSystem<T>, opts: &SearchOptions) -> Result<PropertyVerdict> {
    search(ms.network(), Property::Controllability, ms.n(), opts, |a, seq| eval_controllability(ms, a, seq))
}

pub fn check_observability<T: Scalar>(dual: &DualMergedSystem<T>, opts: &SearchOptions) -> Result<PropertyVerdict> {
    search(dual.network(), Property::Observability, dual.n(), opts, |a, seq| eval_observability(dual, a, seq))
}

pub fn check_reconstructibility<T: Scalar>(
    dual: &DualMergedSystem<T>,
    opts: &SearchOptions,
) -> Result<PropertyVerdict> {
    search(dual.network(), Property::Reconstructibility, dual.n(), opts, |a, seq| {
        eval_reconstructibility(dual, a, seq)
    })
}

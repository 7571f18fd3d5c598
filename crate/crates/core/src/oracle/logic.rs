use std::collections::BTreeSet;

use super::{raw_step, EnumerationBudget};
use crate::error::Result;
use crate::logic::LogicalNetwork;

fn step(net: &LogicalNetwork, gamma: usize, theta: usize) -> (usize, usize) {
    raw_step(net.l().col_index(), net.r().col_index(), net.n_states(), gamma, theta)
}

/// Number of ℓ-edge paths in the input-state graph that start in `from`
/// and end in `to`, counted one path at a time.
pub fn count_paths(
    net: &LogicalNetwork,
    from: &[usize],
    to: &[usize],
    ell: usize,
    budget: &EnumerationBudget,
) -> Result<u128> {
    budget.admit(net.n_inputs(), ell)?;
    let targets: BTreeSet<usize> = to.iter().copied().collect();
    fn dfs(net: &LogicalNetwork, node: usize, left: usize, targets: &BTreeSet<usize>) -> u128 {
        if left == 0 {
            return u128::from(targets.contains(&node));
        }
        let n = net.n_states();
        let theta_next = net.l().col_index()[node - 1];
        (1..=net.n_inputs())
            .map(|g| dfs(net, (g - 1) * n + theta_next, left - 1, targets))
            .sum()
    }
    Ok(from.iter().map(|&s| dfs(net, s, ell, &targets)).sum())
}

/// States θ with some input mapping θ to itself.
pub fn brute_fixed_points(net: &LogicalNetwork) -> BTreeSet<usize> {
    (1..=net.n_states())
        .filter(|&th| (1..=net.n_inputs()).any(|g| step(net, g, th).0 == th))
        .collect()
}

// All input sequences of length `len`, replayed from `start`, reporting
// each visited state list.
fn walks(net: &LogicalNetwork, start: usize, len: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(net: &LogicalNetwork, path: &mut Vec<usize>, len: usize, visit: &mut dyn FnMut(&[usize])) {
        if path.len() == len + 1 {
            visit(path);
            return;
        }
        let here = *path.last().expect("non-empty");
        for g in 1..=net.n_inputs() {
            path.push(step(net, g, here).0);
            rec(net, path, len, visit);
            path.pop();
        }
    }
    rec(net, &mut vec![start], len, visit);
}

/// Simple cycles of length 2..=N as state lists rotated to start at their
/// smallest member, found by replaying every input sequence.
pub fn brute_cycles(net: &LogicalNetwork, budget: &EnumerationBudget) -> Result<BTreeSet<Vec<usize>>> {
    let n = net.n_states();
    budget.admit(net.n_inputs(), n)?;
    let mut out = BTreeSet::new();
    for start in 1..=n {
        for len in 2..=n {
            walks(net, start, len, &mut |p| {
                let body = &p[..len];
                let distinct: BTreeSet<_> = body.iter().collect();
                if p[len] == start && distinct.len() == len && body.iter().all(|&s| s >= start) {
                    out.insert(body.to_vec());
                }
            });
        }
    }
    Ok(out)
}

/// States that return to themselves along some walk of length 1..=N.
pub fn brute_attractor_states(net: &LogicalNetwork, budget: &EnumerationBudget) -> Result<BTreeSet<usize>> {
    let n = net.n_states();
    budget.admit(net.n_inputs(), n)?;
    let mut out = BTreeSet::new();
    for start in 1..=n {
        for len in 1..=n {
            let mut hit = false;
            walks(net, start, len, &mut |p| hit |= p[len] == start);
            if hit {
                out.insert(start);
                break;
            }
        }
    }
    Ok(out)
}

/// States from which some walk of length 0..=N enters `target`.
pub fn brute_basin(net: &LogicalNetwork, target: &BTreeSet<usize>, budget: &EnumerationBudget) -> Result<BTreeSet<usize>> {
    let n = net.n_states();
    budget.admit(net.n_inputs(), n)?;
    let mut out = BTreeSet::new();
    for start in 1..=n {
        let mut hit = target.contains(&start);
        for len in 1..=n {
            if hit {
                break;
            }
            walks(net, start, len, &mut |p| hit |= target.contains(&p[len]));
        }
        if hit {
            out.insert(start);
        }
    }
    Ok(out)
}

/// Per signal: input-state pairs that cannot leave the signal, and pairs
/// that cannot keep it, found by listing the successor pairs directly.
pub fn brute_fot_failures(net: &LogicalNetwork) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = net.n_states();
    let mut out = vec![(Vec::new(), Vec::new()); net.q()];
    for gamma in 1..=net.n_inputs() {
        for theta in 1..=n {
            let (next, sigma) = step(net, gamma, theta);
            let follow: Vec<usize> = (1..=net.n_inputs()).map(|g| step(net, g, next).1).collect();
            let pair = (gamma - 1) * n + theta;
            if follow.iter().all(|&s| s == sigma) {
                out[sigma - 1].0.push(pair);
            }
            if follow.iter().all(|&s| s != sigma) {
                out[sigma - 1].1.push(pair);
            }
        }
    }
    for (leave, stay) in &mut out {
        leave.sort_unstable();
        stay.sort_unstable();
    }
    out
}

pub fn brute_one_step_universal(net: &LogicalNetwork) -> bool {
    (1..=net.n_states()).all(|th| {
        let hit: BTreeSet<usize> = (1..=net.n_inputs()).map(|g| step(net, g, th).0).collect();
        hit.len() == net.n_states()
    })
}

/// First input sequence (lexicographic) whose signals equal `reference`.
pub fn brute_track(
    net: &LogicalNetwork,
    theta0: usize,
    reference: &[usize],
    budget: &EnumerationBudget,
) -> Result<Option<Vec<usize>>> {
    budget.admit(net.n_inputs(), reference.len())?;
    fn rec(net: &LogicalNetwork, theta: usize, reference: &[usize], acc: &mut Vec<usize>) -> bool {
        let Some((&want, rest)) = reference.split_first() else {
            return true;
        };
        for g in 1..=net.n_inputs() {
            let (next, s) = step(net, g, theta);
            if s == want {
                acc.push(g);
                if rec(net, next, rest, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    Ok(rec(net, theta0, reference, &mut acc).then_some(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::network::tests::example_net;

    #[test]
    fn example_path_counts() {
        let net = example_net();
        let b = EnumerationBudget::default();
        assert_eq!(count_paths(&net, &[4, 6], &[5, 7, 8], 2, &b).unwrap(), 4);
        assert_eq!(count_paths(&net, &[4, 6], &[1, 2, 3], 1, &b).unwrap(), 0);
        assert_eq!(count_paths(&net, &[3], &[3], 0, &b).unwrap(), 1);
    }

    #[test]
    fn example_graph_objects() {
        let net = example_net();
        let b = EnumerationBudget::default();
        assert_eq!(brute_fixed_points(&net), BTreeSet::from([1, 3, 4]));
        assert_eq!(brute_attractor_states(&net, &b).unwrap(), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(brute_basin(&net, &BTreeSet::from([4]), &b).unwrap().len(), 4);
        assert!(!brute_one_step_universal(&net));
    }

    #[test]
    fn tracking_search() {
        let net = example_net();
        let b = EnumerationBudget::default();
        assert_eq!(brute_track(&net, 4, &[1, 2, 2], &b).unwrap(), Some(vec![2, 2, 2]));
        assert_eq!(brute_track(&net, 4, &[2], &b).unwrap(), None);
    }

    #[test]
    fn fot_failures_example() {
        let f = brute_fot_failures(&example_net());
        assert_eq!(f[0], (vec![4, 5], vec![3]));
    }
}

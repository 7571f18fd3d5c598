//! Control fixed points, control cycles and their attract basins.
//!
//! The state transition graph has an edge `θ → L⋉γ⋉θ` for every input γ.
//! Fixed points are self-loops; cycles are simple cycles of length ≥ 2 found
//! by bounded DFS; basins come from reverse BFS.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::network::LogicalNetwork;

/// Upper bound on the number of simple cycles listed in a report.
pub const MAX_LISTED_CYCLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub state: usize,
    /// Smallest input with `L⋉γ⋉θ* = θ*`.
    pub input: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlCycle {
    /// States in visiting order, starting from the smallest.
    pub states: Vec<usize>,
    /// `inputs[i]` moves `states[i]` to `states[i + 1]` (cyclically).
    pub inputs: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index")]
pub enum AttractorId {
    FixedPoint(usize),
    Cycle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basin {
    pub attractor: AttractorId,
    /// Each member with a shortest input sequence steering it into the
    /// attractor (empty for members of the attractor itself).
    pub members: BTreeMap<usize, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlAttractorReport {
    pub fixed_points: Vec<FixedPoint>,
    pub cycles: Vec<ControlCycle>,
    /// True when more than [`MAX_LISTED_CYCLES`] cycles exist.
    pub cycles_truncated: bool,
    /// One basin per fixed point, then one per listed cycle.
    pub basins: Vec<Basin>,
    /// States lying on some fixed point or cycle.
    pub attractor_states: Vec<usize>,
    /// Representative states whose basins cover every state; only these
    /// need to be checked as initial logical states.
    pub representatives: Vec<usize>,
}

impl ControlAttractorReport {
    pub fn basin_of(&self, id: AttractorId) -> Option<&Basin> {
        self.basins.iter().find(|b| b.attractor == id)
    }
}

struct Graph {
    n: usize,
    // succ[θ] = (next, smallest input) for each distinct successor
    succ: Vec<Vec<(usize, usize)>>,
    pred: Vec<Vec<usize>>,
}

impl Graph {
    fn new(net: &LogicalNetwork) -> Self {
        let n = net.n_states();
        let mut succ = vec![Vec::new(); n + 1];
        let mut pred = vec![Vec::new(); n + 1];
        for (theta, out) in succ.iter_mut().enumerate().skip(1) {
            *out = net.successors(theta).expect("state in range");
            for &(next, _) in out.iter() {
                pred[next].push(theta);
            }
        }
        Self { n, succ, pred }
    }

    fn edge_input(&self, from: usize, to: usize) -> Option<usize> {
        self.succ[from].iter().find(|&&(t, _)| t == to).map(|&(_, g)| g)
    }

    /// States that can reach `target` (reverse BFS), including the target.
    fn reverse_reach(&self, target: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = target.clone();
        let mut queue: VecDeque<usize> = target.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for &p in &self.pred[v] {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Shortest steering input sequence from every state into `target`.
    fn steering(&self, target: &BTreeSet<usize>) -> BTreeMap<usize, Vec<usize>> {
        // BFS backwards, remembering for each state the next hop toward the target.
        let mut next_hop: BTreeMap<usize, Option<(usize, usize)>> =
            target.iter().map(|&t| (t, None)).collect();
        let mut queue: VecDeque<usize> = target.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            let mut preds = self.pred[v].clone();
            preds.sort_unstable();
            preds.dedup();
            for p in preds {
                if next_hop.contains_key(&p) {
                    continue;
                }
                let gamma = self.edge_input(p, v).expect("edge exists");
                next_hop.insert(p, Some((v, gamma)));
                queue.push_back(p);
            }
        }
        next_hop
            .keys()
            .map(|&s| {
                let mut inputs = Vec::new();
                let mut cur = s;
                while let Some(Some((nxt, g))) = next_hop.get(&cur) {
                    inputs.push(*g);
                    cur = *nxt;
                }
                (s, inputs)
            })
            .collect()
    }

    /// Simple cycles of length ≥ 2 whose smallest state is the start.
    fn cycles(&self, limit: usize) -> (Vec<ControlCycle>, bool) {
        let mut out = Vec::new();
        let mut truncated = false;
        for start in 1..=self.n {
            let mut path = vec![start];
            let mut on_path = vec![false; self.n + 1];
            on_path[start] = true;
            self.cycle_dfs(start, &mut path, &mut on_path, &mut out, limit, &mut truncated);
            if truncated {
                break;
            }
        }
        (out, truncated)
    }

    fn cycle_dfs(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<ControlCycle>,
        limit: usize,
        truncated: &mut bool,
    ) {
        let v = *path.last().expect("non-empty path");
        let mut nexts: Vec<(usize, usize)> = self.succ[v].clone();
        nexts.sort_unstable();
        for (w, _) in nexts {
            if *truncated {
                return;
            }
            if w == start && path.len() >= 2 {
                if out.len() == limit {
                    *truncated = true;
                    return;
                }
                let inputs = path
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| {
                        let t = path.get(i + 1).copied().unwrap_or(start);
                        self.edge_input(s, t).expect("edge exists")
                    })
                    .collect();
                out.push(ControlCycle {
                    states: path.clone(),
                    inputs,
                });
            } else if w > start && !on_path[w] && path.len() < self.n {
                on_path[w] = true;
                path.push(w);
                self.cycle_dfs(start, path, on_path, out, limit, truncated);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// States on some cycle (self-loops included): v is recurrent iff some
    /// successor of v leads back to v.
    fn recurrent_states(&self) -> BTreeSet<usize> {
        (1..=self.n)
            .filter(|&v| self.succ[v].iter().any(|&(w, _)| self.forward_reach(w).contains(&v)))
            .collect()
    }

    fn forward_reach(&self, from: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.succ[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Greedy cover: repeatedly keep the attractor state whose basin covers the
/// most still-uncovered states; ties go to the larger state index.
fn select_representatives(graph: &Graph, candidates: &BTreeSet<usize>) -> Vec<usize> {
    let basins: Vec<(usize, BTreeSet<usize>)> = candidates
        .iter()
        .map(|&c| (c, graph.reverse_reach(&BTreeSet::from([c]))))
        .collect();
    let mut uncovered: BTreeSet<usize> = (1..=graph.n).collect();
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let best = basins
            .iter()
            .map(|(c, b)| (b.intersection(&uncovered).count(), *c, b))
            .filter(|(gain, _, _)| *gain > 0)
            .max_by_key(|(gain, c, _)| (*gain, *c));
        let Some((_, c, basin)) = best else { break };
        picked.push(c);
        for s in basin {
            uncovered.remove(s);
        }
    }
    picked.sort_unstable();
    picked
}

pub fn control_attractors(net: &LogicalNetwork) -> ControlAttractorReport {
    let graph = Graph::new(net);
    let mut fixed_points = Vec::new();
    for theta in 1..=graph.n {
        if let Some(input) = graph.edge_input(theta, theta) {
            fixed_points.push(FixedPoint { state: theta, input });
        }
    }
    let (cycles, cycles_truncated) = graph.cycles(MAX_LISTED_CYCLES);

    let mut basins = Vec::new();
    for (i, fp) in fixed_points.iter().enumerate() {
        let target = BTreeSet::from([fp.state]);
        basins.push(Basin {
            attractor: AttractorId::FixedPoint(i),
            members: graph.steering(&target),
        });
    }
    for (i, cyc) in cycles.iter().enumerate() {
        let target: BTreeSet<usize> = cyc.states.iter().copied().collect();
        basins.push(Basin {
            attractor: AttractorId::Cycle(i),
            members: graph.steering(&target),
        });
    }

    let attractor_states = graph.recurrent_states();
    let representatives = select_representatives(&graph, &attractor_states);
    ControlAttractorReport {
        fixed_points,
        cycles,
        cycles_truncated,
        basins,
        attractor_states: attractor_states.into_iter().collect(),
        representatives,
    }
}

//! DOT export of the input-state dynamic graph.

use std::fmt::Write;

use super::network::LogicalNetwork;

/// Label of input-state `index` in the form `γ×(θ₁,…,θₙ)`.
pub fn input_state_label(net: &LogicalNetwork, index: usize) -> String {
    let (gamma, theta) = net.decode(index).expect("index in range");
    let digits: Vec<String> = net
        .state_digits(theta)
        .expect("state in range")
        .iter()
        .map(|d| d.to_string())
        .collect();
    format!("{gamma}×({})", digits.join(","))
}

/// Input-state graph as DOT text: one node per pair (γ, θ), and an edge
/// from (γ, θ) to (γ', L⋉γ⋉θ) for every next input γ'.
pub fn to_dot(net: &LogicalNetwork) -> String {
    let n = net.n_states();
    let mut out = String::from("digraph input_state {\n");
    for idx in 1..=net.input_state_count() {
        let _ = writeln!(out, "  s{idx} [label=\"{}\"];", input_state_label(net, idx));
    }
    for (j, &target) in net.l().col_index().iter().enumerate() {
        for gamma in 0..net.n_inputs() {
            let _ = writeln!(out, "  s{} -> s{};", j + 1, gamma * n + target);
        }
    }
    out.push_str("}\n");
    out
}

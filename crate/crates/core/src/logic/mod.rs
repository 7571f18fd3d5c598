//! k-valued logical control networks: dynamics, set reachability, control
//! attractors and graph export.

mod attractor;
mod graph;
pub(crate) mod network;
mod setreach;

pub use attractor::{
    control_attractors, AttractorId, Basin, ControlAttractorReport, ControlCycle, FixedPoint,
    MAX_LISTED_CYCLES,
};
pub use graph::{input_state_label, to_dot};
pub use network::LogicalNetwork;
pub use setreach::{
    input_state_matrix, set_reachability, set_reachability_counts, set_reachability_verdicts,
    InputStateSubset, SetReachVerdicts, SubsetClass,
};

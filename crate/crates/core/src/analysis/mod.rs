//! Reachability, controllability, observability and reconstructibility of
//! a switched linear system under a logically generated switching signal.

mod feasible;
mod reachable;
mod verdict;

pub use feasible::{feasible_input_sequences, FeasibleSearch, FeasibleSequence};
pub use reachable::{
    dual_free_motion, dual_reachable_set, free_motion, free_motion_flat, reachable_set,
    reachable_set_flat, switching_trajectory, ReachableSet, Trajectory,
};
pub use verdict::{
    check_controllability, check_observability, check_property, check_reachability,
    check_reconstructibility, evaluate, lexicographic_sequences, passing_sequences, AlphaDetail,
    AlphaSelection, Property, PropertyVerdict, SearchOptions, DEFAULT_SEARCH_BUDGET,
};

//! Switched linear systems and their merger with a logical network.

mod merge;
pub(crate) mod system;

pub use merge::{closed_form, merge, merge_dual, DualMergedSystem, MergedSystem, PlacedBlock};
pub use system::{Mode, SwitchedLinearSystem};

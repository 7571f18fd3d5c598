//! Whether the logical network can produce switching signals that meet
//! operating-time, dwell-time or reference-tracking requirements.

mod fot;
mod track;

pub use fot::{
    check_dwell_time_realizable, check_fot_realizable, check_one_step_universal, signal_preimages,
    ConditionCheck, Duration, FotClass, FotSpec, RealizationReport, SignalCheck, SignalPreimage,
};
pub use track::{check_trackable, TrackingProblem, TrackingReport};

//! Extremal structure around the minimum-degree tiling threshold: the
//! threshold itself, bottleneck graphs, tightness and stability probes.

mod edit;
mod ess;
mod search;
mod threshold;
mod tightness;

pub use edit::{edit_distance_to_bottleneck, EditDistance, EditMode, EXACT_EDIT_CAP};
pub use ess::{ess_checker, EssVerdict};
pub use search::{
    repair_min_degree, sample_step_graphon, search_counterexamples, Counterexample, SearchReport,
};
pub use threshold::{
    bottleneck_graph, komlos_threshold, BottleneckGraphSpec, InternalRule, ThresholdSpec,
};
pub use tightness::{
    finite_komlos_check, verify_tightness, FiniteCheckReport, TightnessReport, FINITE_CHECK_CAP,
};

//! Exact tiling numbers, fractional tilings and fractional covers of finite
//! graphs and step graphons, with the extremal constructions around the
//! minimum-degree tiling threshold.
//!
//! Every quantity is an exact rational; nothing in the crate uses floating
//! point arithmetic on problem data.

// Dense matrix code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod coloring;
pub mod copies;
pub mod error;
pub mod graph;
pub mod graphon;
pub mod lab;
pub mod lp;
pub mod packing;
pub mod rational;
pub mod tiling;

pub use coloring::{
    chromatic_number, critical_chromatic_number, min_smallest_class, ChromaticProfile, Coloring,
};
pub use copies::enumerate_copies;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graphon::{bottleneck_graphon, turan_graphon, PartTuple, SignedStep, StepGraphon};
pub use lp::{solve_lp, Direction, LpProblem, LpResult, LpStatus, Sense};
pub use packing::{solve_packing, PackingInstance, PackingSolution};
pub use rational::{format_rational, parse_rational, Rational};
pub use tiling::{
    fcov_graph, fcov_graphon, ftil_graph, til_graph, til_graphon,
    tiling_positive_iff_density_positive, verify_duality, DualityReport, GraphonCover,
    GraphonTiling,
};

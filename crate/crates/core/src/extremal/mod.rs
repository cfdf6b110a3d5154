//! Moore graphs, the chained construction `G_{n,δ,k}` built from them, and
//! sharpness measurements against the girth bounds.

mod catalog;
mod chain;
mod field;
mod sharpness;

pub use catalog::{
    moore_catalog, moore_order, projective_plane_incidence, MooreGraph, MooreSource, MooreSpec,
};
pub use chain::{chain_graph, ChainSpec};
pub use field::FiniteField;
pub use sharpness::{allowed_gap, sharpness_report, SharpnessRow};

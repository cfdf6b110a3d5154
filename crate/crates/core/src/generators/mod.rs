//! Fixture graphs and seeded random graphs with prescribed minimum degree and
//! girth.

mod named;
mod random;

pub use named::{named, NamedGraph};
pub use random::{random_min_degree_girth, FailureReason, GenerationFailure, GeneratorConfig};

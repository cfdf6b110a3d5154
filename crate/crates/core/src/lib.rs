//! Average eccentricity of graphs with prescribed minimum degree and girth:
//! exact evaluation, upper and lower bounds, proof certificates, extremal
//! chains and random generators.
//!
//! Every routine is generic over a [`Scalar`]; the exact instantiation uses
//! [`Rational`] and is what the certifier and the CLI rely on.

pub mod bounds;
pub mod certifier;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::{Rational, Scalar};

/// A bound evaluated in exact arithmetic.
pub type ExactBound = bounds::BoundResult<Rational>;
/// A bound evaluated in double precision.
pub type FloatBound = bounds::BoundResult<f64>;
/// A vertex weight function with exact weights.
pub type ExactWeights = graph::WeightFunction<Rational>;

//! Exact counting of graph homomorphisms, independent sets, matchings and
//! Potts configurations on small graphs, and machine-checkable versions of the
//! extremal inequalities for regular graphs built on top of those counts.
//!
//! All verdicts are computed in exact arithmetic: counts are [`Count`]
//! (arbitrary precision unsigned integers) and observables are [`Rational`].
//! Observables such as the occupancy fraction are generic over the
//! [`Scalar`] trait so they can also be evaluated in `f64` for display.

pub mod counting;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod hunt;
pub mod scalar;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Adjacency, Bigraph, Graph, LoopGraph, Side};
pub use scalar::Scalar;

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;
/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

//! # sidonlab
//!
//! Exact-arithmetic tools for Sidon sets in F_2^n and the graphs they
//! generate: fast Walsh-Hadamard transforms over the integers, spectral and
//! combinatorial Sidon/cover tests that cross-check each other, Cayley
//! graphs with eigenvalue-exact strongly-regular-graph certification,
//! GF(2^n) constructions (multiplicative subgroups, APN power-map graphs,
//! Kloosterman sums), and a spectral halving pipeline for lower-bound
//! witnesses.
//!
//! Everything is integer-exact: no floating point ever decides a property.
//!
//! The `examples/` directory is the best entry point; each example is a
//! runnable walkthrough of one capability. A thin `sidonlab` binary wraps
//! the same library calls for scripting (construct / verify / cayley /
//! bounds / scan).

pub mod bits;
pub mod cayley;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod field;
pub mod format;
pub mod pointset;
pub mod report;
pub mod spectral;

pub use cayley::{CayleyGraph, SrgParams, SrgPrediction};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use pointset::{AffineMap, PointSet};
pub use report::{verify_point_set, Assertion, VerificationReport};
pub use spectral::{BooleanFn, SpectrumVec};

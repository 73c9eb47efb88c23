//! Pseudohalfplane hypergraphs: a combinatorial abstraction of points and
//! pseudohalfplanes over an ordered vertex set.
//!
//! The crate provides the hypergraph types and their recognition (via
//! ABA-freeness and a 2-SAT labelling), extremal-vertex machinery, abstract
//! convex hulls, vertex/hyperedge extension lemmas, and constructive
//! witnesses for the discrete Helly, Caratheodory, Steinitz, separation,
//! Kirchberger, Radon and cup-cap theorems on such hypergraphs. An
//! exact-rational points-and-halfplanes generator serves as the geometric
//! oracle for all of it.

pub mod convexity;
pub mod error;
pub mod extension;
pub mod extremal;
pub mod generators;
pub mod hypergraph;
pub mod json;
pub mod recognition;
pub mod set;
pub mod theorems;
pub mod verify;

pub use error::{Error, PremiseViolation, Result};
pub use hypergraph::{HemisphereHypergraph, Hypergraph, Sign, SignedHypergraph};
pub use recognition::{check_aba_free, recognize, recognize_hemisphere, recognize_ordered};
pub use set::{VertexSet, MAX_VERTICES};

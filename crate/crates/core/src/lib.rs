//! Graph-structure toolkit around stable-set-over-polypath configurations:
//! deterministic generators for the graph families involved, clause-level
//! validators for every structure, exact brute-force oracles at desk scale,
//! and witness-producing extractors whose outputs always re-validate.
//!
//! The unit every module works with is the certificate: a serializable value
//! citing vertex ids and the fingerprint of the graph it was computed on,
//! checkable without trusting the code that produced it.

pub mod extract;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod structures;
pub mod witness;

pub use graph::{CycleWitness, Fingerprint, Graph, GraphError, PathWitness, VertexSet};
pub use graph6::{dot_emit, graph6_emit, graph6_parse, Graph6Error};

//! The hairy graph complex of connected colored hairy graphs.
//!
//! Graphs carry the standard orientation: vertices in index order followed by
//! edges in index order, every edge directed as stored. Any other orientation
//! is expressed as a sign relative to this one.

mod canon;
mod differential;
mod enumerate;
mod graph;

pub use canon::{canonicalize, CanonicalGenerator};
pub use differential::{expansion_differential, expansion_terms};
pub use enumerate::{enumerate_generators, Enumeration};
pub use graph::{Gradings, HairyGraph, VertexKind};

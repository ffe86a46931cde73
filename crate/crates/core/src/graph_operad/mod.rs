//! The graph category underlying modular operads.
//!
//! A [`Graph`] is a finite set of half-edges attached to vertices together
//! with an involution: fixed points are legs, two-cycles are internal edges.
//! Cutting all internal edges ([`cut_edges`]) yields one [`Corolla`] per
//! vertex, contracting them ([`contract_edges`]) one corolla per connected
//! component. A [`GraphMorphism`] is a graph with explicit identifications
//! of both ends, and [`compose`] substitutes graphs into vertices.
//! [`Graph::parse`] and [`Graph::to_text`] read and write a line-based
//! text format.

mod canonical;
mod graph;
mod morphism;
mod text;

pub use canonical::CanonicalForm;
pub use graph::{contract_edges, cut_edges, genus, Corolla, Graph, CUT_PREFIX};
pub use morphism::{compose, GraphMorphism, MorphismKey, Slot};

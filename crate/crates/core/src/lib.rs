//! Segmentation of OWL ontologies.
//!
//! Horizontal segmentation keeps the schema and filters individuals by a
//! boolean condition; vertical segmentation projects the schema onto chosen
//! classes and/or properties while keeping the links needed to reassemble
//! the pieces; hybrid segmentation composes both. Every segment is purified
//! so it is a valid ontology on its own, and compatible segments can be
//! merged back together.

pub mod assembly;
pub mod filter;
pub mod fixtures;
pub mod model;
pub mod rdfxml;
pub mod segment;

pub use model::{Iri, Literal, Ontology};

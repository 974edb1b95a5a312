//! In-memory model of the supported OWL subset.
//!
//! An [`Ontology`] is a schema (classes, object and datatype properties) plus
//! an extension (individuals), with namespace bindings and an optional header.
//! Values are plain data; every transform in this crate returns a new value.

mod iri;
mod literal;
mod ontology;
mod validate;

pub(crate) use iri::is_ncname;
pub use iri::{
    Iri, IriError, NamespaceError, NamespaceMap, OSEG_NS, OWL_NS, RDFS_NS, RDF_NS,
    STANDARD_PREFIXES, XML_NS, XSD_NS,
};
#[allow(unused_imports)]
pub(crate) use literal::{parse_dmy_date, parse_iso_date};
pub use literal::{Datatype, Literal, LiteralError};
pub use ontology::{
    ClassDef, DataAssertion, DatatypePropertyDef, Header, Individual, ObjectAssertion,
    ObjectPropertyDef, Ontology, PropertyKind,
};
pub use validate::{Category, ValidationReport, Violation};

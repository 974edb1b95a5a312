//! Parsing and deterministic serialization of the supported RDF/XML subset.
//!
//! Supported vocabulary: the `owl:Ontology` header (with `rdfs:comment`),
//! `owl:Class` with `rdfs:subClassOf`, `owl:ObjectProperty` and
//! `owl:DatatypeProperty` with one `rdfs:domain` and one `rdfs:range`, and
//! typed individuals written as class-named elements carrying `rdf:about` or
//! `rdf:ID`, with nested property elements (`rdf:resource` for object
//! properties, text plus optional `rdf:datatype` for datatype properties) and
//! optional extra `rdf:type` children. Everything else is unsupported: an
//! error in strict mode, dropped with a [`ParseWarning`] in lenient mode.

use std::fmt;

use thiserror::Error;

mod parse;
mod serialize;
mod tree;

pub use parse::{parse, parse_str};
pub use serialize::{serialize, serialize_with_layout, Layout};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ParseMode {
    #[default]
    Strict,
    Lenient,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub mode: ParseMode,
}

impl ParseOptions {
    pub fn strict() -> Self {
        ParseOptions {
            mode: ParseMode::Strict,
        }
    }

    pub fn lenient() -> Self {
        ParseOptions {
            mode: ParseMode::Lenient,
        }
    }
}

/// 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// A construct dropped while parsing in lenient mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub position: Position,
    pub construct: String,
    pub action: &'static str,
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.position, self.construct, self.action)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Xml,
    Encoding,
    Unsupported,
    Dangling,
    DatatypeMismatch,
    InvalidIri,
    /// The document is well-formed but the resulting model does not validate.
    Invalid,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Xml => "xml-syntax",
            ParseErrorKind::Encoding => "encoding",
            ParseErrorKind::Unsupported => "unsupported",
            ParseErrorKind::Dangling => "dangling-reference",
            ParseErrorKind::DatatypeMismatch => "datatype-mismatch",
            ParseErrorKind::InvalidIri => "invalid-iri",
            ParseErrorKind::Invalid => "invalid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {}: {message}", kind.as_str())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: Position,
    pub message: String,
}

//! Reassembling segments, comparing ontologies, and size statistics.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::model::{ClassDef, Header, Iri, NamespaceMap, Ontology};
use crate::segment::purify;

mod diff;
mod stats;

pub use diff::{diff, CategoryDiff, OntologyDiff};
pub use stats::{stats, SegmentReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConflictKind {
    Class,
    ObjectProperty,
    DatatypeProperty,
    Header,
    Namespace,
}

impl ConflictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConflictKind::Class => "class",
            ConflictKind::ObjectProperty => "object-property",
            ConflictKind::DatatypeProperty => "datatype-property",
            ConflictKind::Header => "header",
            ConflictKind::Namespace => "namespace",
        }
    }
}

/// Two segments define the same IRI differently.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MergeConflict {
    pub kind: ConflictKind,
    pub iri: Iri,
    /// Both definitions, in a canonical order.
    pub detail: String,
}

impl fmt::Display for MergeConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.kind.as_str(), self.iri, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("nothing to merge")]
    Empty,
    #[error("{} conflicting definition(s), first: {}", .0.len(), .0[0])]
    Conflicts(Vec<MergeConflict>),
}

fn conflict<T: fmt::Debug>(kind: ConflictKind, iri: &Iri, a: &T, b: &T) -> MergeConflict {
    let (a, b) = (format!("{a:?}"), format!("{b:?}"));
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    MergeConflict {
        kind,
        iri: iri.clone(),
        detail: format!("{a} vs {b}"),
    }
}

/// Picks the full definition over a stub; `None` if both are full (or
/// both stubs) and differ.
fn merge_class(a: &ClassDef, b: &ClassDef) -> Option<ClassDef> {
    match (a.external, b.external) {
        (true, false) => Some(b.clone()),
        (false, true) => Some(a.clone()),
        _ if a == b => Some(a.clone()),
        _ => None,
    }
}

/// Union of `segments` by IRI, purified once at the end.
///
/// A stub class gives way to the full definition; any other pair of
/// different definitions for one IRI is a conflict. Individuals are merged
/// by uniting types and assertions, so exact duplicates collapse. The result
/// does not depend on the order of `segments`.
pub fn merge(segments: &[Ontology]) -> Result<Ontology, MergeError> {
    if segments.is_empty() {
        return Err(MergeError::Empty);
    }
    let mut conflicts = Vec::new();

    let mut header: Option<Header> = None;
    let mut bindings: BTreeMap<String, Iri> = BTreeMap::new();
    let mut base: Option<Iri> = None;
    for s in segments {
        if let Some(h) = s.header() {
            match &header {
                None => header = Some(h.clone()),
                Some(cur) if cur == h => {}
                Some(cur) => conflicts.push(conflict(ConflictKind::Header, &cur.iri, cur, h)),
            }
        }
        for (prefix, iri) in s.namespaces().bindings() {
            match bindings.get(prefix) {
                None => {
                    bindings.insert(prefix.to_owned(), iri.clone());
                }
                Some(cur) if cur == iri => {}
                Some(cur) => conflicts.push(MergeConflict {
                    kind: ConflictKind::Namespace,
                    iri: cur.min(iri).clone(),
                    detail: format!(
                        "prefix `{prefix}` bound to {} and {}",
                        cur.min(iri),
                        cur.max(iri)
                    ),
                }),
            }
        }
        if let Some(b) = s.namespaces().base() {
            match &base {
                None => base = Some(b.clone()),
                Some(cur) if cur == b => {}
                Some(cur) => conflicts.push(MergeConflict {
                    kind: ConflictKind::Namespace,
                    iri: cur.min(b).clone(),
                    detail: format!("base {} vs {}", cur.min(b), cur.max(b)),
                }),
            }
        }
    }

    let mut classes: BTreeMap<&Iri, ClassDef> = BTreeMap::new();
    let mut object_properties = BTreeMap::new();
    let mut datatype_properties = BTreeMap::new();
    for s in segments {
        for c in s.classes() {
            match classes.get(&c.id) {
                None => {
                    classes.insert(&c.id, c.clone());
                }
                Some(cur) => match merge_class(cur, c) {
                    Some(m) => {
                        classes.insert(&c.id, m);
                    }
                    None => conflicts.push(conflict(ConflictKind::Class, &c.id, cur, c)),
                },
            }
        }
        for p in s.object_properties() {
            match object_properties.get(&p.id) {
                None => {
                    object_properties.insert(&p.id, p.clone());
                }
                Some(cur) if cur == p => {}
                Some(cur) => conflicts.push(conflict(ConflictKind::ObjectProperty, &p.id, cur, p)),
            }
        }
        for p in s.datatype_properties() {
            match datatype_properties.get(&p.id) {
                None => {
                    datatype_properties.insert(&p.id, p.clone());
                }
                Some(cur) if cur == p => {}
                Some(cur) => {
                    conflicts.push(conflict(ConflictKind::DatatypeProperty, &p.id, cur, p))
                }
            }
        }
    }
    if !conflicts.is_empty() {
        conflicts.sort();
        conflicts.dedup();
        return Err(MergeError::Conflicts(conflicts));
    }

    let mut ns = NamespaceMap::new();
    ns.set_base(base);
    for (prefix, iri) in bindings {
        ns.bind(&prefix, iri)
            .expect("bindings come from valid maps");
    }
    let mut out = Ontology::new(ns);
    out.set_header(header);
    classes.into_values().for_each(|c| out.add_class(c));
    object_properties
        .into_values()
        .for_each(|p| out.add_object_property(p));
    datatype_properties
        .into_values()
        .for_each(|p| out.add_datatype_property(p));
    for s in segments {
        for ind in s.individuals() {
            match out.individual_mut(ind.id()) {
                Some(cur) => cur.absorb(ind),
                None => out.add_individual(ind.clone()),
            }
        }
    }
    Ok(purify(out).0)
}

use std::collections::BTreeMap;
use std::fmt;

use crate::model::{Iri, Ontology};

/// IRIs only in `b` (added), only in `a` (removed), or in both with
/// different definitions (changed). Each list is sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryDiff {
    pub added: Vec<Iri>,
    pub removed: Vec<Iri>,
    pub changed: Vec<Iri>,
}

impl CategoryDiff {
    pub fn is_empty(&self) -> bool {
        self.added.is_empty() && self.removed.is_empty() && self.changed.is_empty()
    }

    fn between<'a, T: PartialEq + 'a>(
        a: impl Iterator<Item = (&'a Iri, &'a T)>,
        b: impl Iterator<Item = (&'a Iri, &'a T)>,
    ) -> Self {
        let a: BTreeMap<&Iri, &T> = a.collect();
        let b: BTreeMap<&Iri, &T> = b.collect();
        let mut d = CategoryDiff::default();
        for (k, va) in &a {
            match b.get(k) {
                None => d.removed.push((*k).clone()),
                Some(vb) if vb != va => d.changed.push((*k).clone()),
                Some(_) => {}
            }
        }
        d.added = b
            .keys()
            .filter(|k| !a.contains_key(*k))
            .map(|k| (*k).clone())
            .collect();
        d
    }

    fn swap(self) -> Self {
        CategoryDiff {
            added: self.removed,
            removed: self.added,
            changed: self.changed,
        }
    }
}

/// Structural difference from `a` to `b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OntologyDiff {
    pub header_changed: bool,
    pub namespaces_changed: bool,
    pub classes: CategoryDiff,
    pub object_properties: CategoryDiff,
    pub datatype_properties: CategoryDiff,
    pub individuals: CategoryDiff,
}

impl OntologyDiff {
    pub fn is_empty(&self) -> bool {
        !self.header_changed
            && !self.namespaces_changed
            && self.classes.is_empty()
            && self.object_properties.is_empty()
            && self.datatype_properties.is_empty()
            && self.individuals.is_empty()
    }

    pub fn schema_unchanged(&self) -> bool {
        !self.header_changed
            && !self.namespaces_changed
            && self.classes.is_empty()
            && self.object_properties.is_empty()
            && self.datatype_properties.is_empty()
    }

    /// The diff from `b` to `a`.
    pub fn reversed(self) -> Self {
        OntologyDiff {
            header_changed: self.header_changed,
            namespaces_changed: self.namespaces_changed,
            classes: self.classes.swap(),
            object_properties: self.object_properties.swap(),
            datatype_properties: self.datatype_properties.swap(),
            individuals: self.individuals.swap(),
        }
    }
}

impl fmt::Display for OntologyDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.header_changed {
            writeln!(f, "~ header")?;
        }
        if self.namespaces_changed {
            writeln!(f, "~ namespaces")?;
        }
        let cats = [
            ("class", &self.classes),
            ("object-property", &self.object_properties),
            ("datatype-property", &self.datatype_properties),
            ("individual", &self.individuals),
        ];
        for (name, d) in cats {
            for (mark, list) in [("+", &d.added), ("-", &d.removed), ("~", &d.changed)] {
                for iri in list {
                    writeln!(f, "{mark} {name} {iri}")?;
                }
            }
        }
        Ok(())
    }
}

/// Compares two ontologies category by category, keyed by IRI.
/// An external stub and a full class under one IRI count as changed.
pub fn diff(a: &Ontology, b: &Ontology) -> OntologyDiff {
    OntologyDiff {
        header_changed: a.header() != b.header(),
        namespaces_changed: a.namespaces() != b.namespaces(),
        classes: CategoryDiff::between(
            a.classes().iter().map(|c| (&c.id, c)),
            b.classes().iter().map(|c| (&c.id, c)),
        ),
        object_properties: CategoryDiff::between(
            a.object_properties().iter().map(|p| (&p.id, p)),
            b.object_properties().iter().map(|p| (&p.id, p)),
        ),
        datatype_properties: CategoryDiff::between(
            a.datatype_properties().iter().map(|p| (&p.id, p)),
            b.datatype_properties().iter().map(|p| (&p.id, p)),
        ),
        individuals: CategoryDiff::between(
            a.individuals().iter().map(|i| (i.id(), i)),
            b.individuals().iter().map(|i| (i.id(), i)),
        ),
    }
}

use std::collections::HashMap;
use std::fmt;

use super::iri::Iri;
use super::literal::Datatype;
use super::ontology::{Ontology, PropertyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Class,
    ObjectProperty,
    DatatypeProperty,
    Individual,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Class => "class",
            Category::ObjectProperty => "object-property",
            Category::DatatypeProperty => "datatype-property",
            Category::Individual => "individual",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateIri {
        category: Category,
        iri: Iri,
    },
    UnknownSuperClass {
        class: Iri,
        super_class: Iri,
    },
    SubclassCycle {
        class: Iri,
    },
    UnknownDomain {
        property: Iri,
        class: Iri,
    },
    UnknownRange {
        property: Iri,
        class: Iri,
    },
    EmptyTypes {
        individual: Iri,
    },
    UndeclaredType {
        individual: Iri,
        class: Iri,
    },
    /// The property is not declared with the kind the assertion needs.
    UndeclaredProperty {
        individual: Iri,
        property: Iri,
        expected: PropertyKind,
    },
    DatatypeMismatch {
        individual: Iri,
        property: Iri,
        expected: Datatype,
        found: Datatype,
    },
    DanglingTarget {
        source: Iri,
        property: Iri,
        target: Iri,
    },
    /// Class or property IRI that cannot be written as an XML element name.
    UnserializableName {
        iri: Iri,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateIri { category, iri } => write!(f, "duplicate {category} {iri}"),
            Violation::UnknownSuperClass { class, super_class } => {
                write!(f, "class {class} has undeclared superclass {super_class}")
            }
            Violation::SubclassCycle { class } => write!(f, "class {class} is its own ancestor"),
            Violation::UnknownDomain { property, class } => {
                write!(f, "property {property} has undeclared domain {class}")
            }
            Violation::UnknownRange { property, class } => {
                write!(f, "property {property} has undeclared range {class}")
            }
            Violation::EmptyTypes { individual } => {
                write!(f, "individual {individual} has no type")
            }
            Violation::UndeclaredType { individual, class } => {
                write!(f, "individual {individual} has undeclared type {class}")
            }
            Violation::UndeclaredProperty {
                individual,
                property,
                expected,
            } => {
                let kind = match expected {
                    PropertyKind::Object => "object",
                    PropertyKind::Datatype => "datatype",
                };
                write!(
                    f,
                    "individual {individual} uses undeclared {kind} property {property}"
                )
            }
            Violation::DatatypeMismatch {
                individual,
                property,
                expected,
                found,
            } => write!(
                f,
                "individual {individual}: {property} expects {expected}, found {found}"
            ),
            Violation::DanglingTarget {
                source,
                property,
                target,
            } => write!(f, "{source} {property} -> missing individual {target}"),
            Violation::UnserializableName { iri } => {
                write!(f, "{iri} has no XML-name local part")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

fn duplicates<'a>(
    ids: impl Iterator<Item = &'a Iri>,
    category: Category,
    out: &mut Vec<Violation>,
) {
    let mut prev: Option<&Iri> = None;
    for id in ids {
        if prev == Some(id) {
            out.push(Violation::DuplicateIri {
                category,
                iri: id.clone(),
            });
        }
        prev = Some(id);
    }
}

impl Ontology {
    /// Lists every referential-integrity problem; empty means valid.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();

        duplicates(
            self.classes().iter().map(|c| &c.id),
            Category::Class,
            &mut v,
        );
        duplicates(
            self.object_properties().iter().map(|p| &p.id),
            Category::ObjectProperty,
            &mut v,
        );
        duplicates(
            self.datatype_properties().iter().map(|p| &p.id),
            Category::DatatypeProperty,
            &mut v,
        );
        duplicates(
            self.individuals().iter().map(|i| i.id()),
            Category::Individual,
            &mut v,
        );

        let names = self
            .classes()
            .iter()
            .map(|c| &c.id)
            .chain(self.object_properties().iter().map(|p| &p.id))
            .chain(self.datatype_properties().iter().map(|p| &p.id));
        for iri in names {
            if iri.split().is_none() {
                v.push(Violation::UnserializableName { iri: iri.clone() });
            }
        }

        for c in self.classes() {
            for s in &c.super_classes {
                if self.class(s).is_none() {
                    v.push(Violation::UnknownSuperClass {
                        class: c.id.clone(),
                        super_class: s.clone(),
                    });
                }
            }
        }
        self.find_cycles(&mut v);

        for p in self.object_properties() {
            if self.class(&p.domain).is_none() {
                v.push(Violation::UnknownDomain {
                    property: p.id.clone(),
                    class: p.domain.clone(),
                });
            }
            if self.class(&p.range).is_none() {
                v.push(Violation::UnknownRange {
                    property: p.id.clone(),
                    class: p.range.clone(),
                });
            }
        }
        for p in self.datatype_properties() {
            if self.class(&p.domain).is_none() {
                v.push(Violation::UnknownDomain {
                    property: p.id.clone(),
                    class: p.domain.clone(),
                });
            }
        }

        for ind in self.individuals() {
            if ind.types().is_empty() {
                v.push(Violation::EmptyTypes {
                    individual: ind.id().clone(),
                });
            }
            for t in ind.types() {
                if self.class(t).is_none() {
                    v.push(Violation::UndeclaredType {
                        individual: ind.id().clone(),
                        class: t.clone(),
                    });
                }
            }
            for a in ind.data_assertions() {
                match self.datatype_property(&a.property) {
                    None => v.push(Violation::UndeclaredProperty {
                        individual: ind.id().clone(),
                        property: a.property.clone(),
                        expected: PropertyKind::Datatype,
                    }),
                    Some(p) if p.range != a.value.datatype() => {
                        v.push(Violation::DatatypeMismatch {
                            individual: ind.id().clone(),
                            property: a.property.clone(),
                            expected: p.range,
                            found: a.value.datatype(),
                        })
                    }
                    Some(_) => {}
                }
            }
            for a in ind.object_assertions() {
                if self.object_property(&a.property).is_none() {
                    v.push(Violation::UndeclaredProperty {
                        individual: ind.id().clone(),
                        property: a.property.clone(),
                        expected: PropertyKind::Object,
                    });
                }
                if self.individual(&a.target).is_none() {
                    v.push(Violation::DanglingTarget {
                        source: ind.id().clone(),
                        property: a.property.clone(),
                        target: a.target.clone(),
                    });
                }
            }
        }

        ValidationReport { violations: v }
    }

    fn find_cycles(&self, out: &mut Vec<Violation>) {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut marks: HashMap<&Iri, Mark> = HashMap::new();
        for root in self.classes() {
            if marks.contains_key(&root.id) {
                continue;
            }
            // iterative DFS: (class, next super index)
            let mut stack: Vec<(&Iri, usize)> = vec![(&root.id, 0)];
            marks.insert(&root.id, Mark::Open);
            while let Some((node, idx)) = stack.pop() {
                let supers = self
                    .class(node)
                    .map(|c| c.super_classes.as_slice())
                    .unwrap_or(&[]);
                if idx < supers.len() {
                    stack.push((node, idx + 1));
                    let next = &supers[idx];
                    match marks.get(next) {
                        Some(Mark::Open) => out.push(Violation::SubclassCycle {
                            class: next.clone(),
                        }),
                        Some(Mark::Done) => {}
                        None if self.class(next).is_some() => {
                            marks.insert(next, Mark::Open);
                            stack.push((next, 0));
                        }
                        None => {}
                    }
                } else {
                    marks.insert(node, Mark::Done);
                }
            }
        }
    }
}

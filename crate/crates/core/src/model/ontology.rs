use std::collections::{BTreeSet, VecDeque};

use super::iri::{Iri, NamespaceMap};
use super::literal::{Datatype, Literal};

/// Ontology IRI plus free-text comments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Header {
    pub iri: Iri,
    pub comments: Vec<String>,
}

impl Header {
    pub fn new(iri: Iri) -> Self {
        Header {
            iri,
            comments: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDef {
    pub id: Iri,
    pub super_classes: Vec<Iri>,
    /// Declaration-only bridge stub kept so a cross-segment link stays well-defined.
    pub external: bool,
}

impl ClassDef {
    pub fn new(id: Iri) -> Self {
        ClassDef {
            id,
            super_classes: Vec::new(),
            external: false,
        }
    }

    pub fn stub(id: Iri) -> Self {
        ClassDef {
            id,
            super_classes: Vec::new(),
            external: true,
        }
    }

    pub fn with_super(mut self, sup: Iri) -> Self {
        self.super_classes.push(sup);
        self.normalize();
        self
    }

    fn normalize(&mut self) {
        self.super_classes.sort();
        self.super_classes.dedup();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectPropertyDef {
    pub id: Iri,
    pub domain: Iri,
    pub range: Iri,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatatypePropertyDef {
    pub id: Iri,
    pub domain: Iri,
    pub range: Datatype,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DataAssertion {
    pub property: Iri,
    pub value: Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectAssertion {
    pub property: Iri,
    pub target: Iri,
}

/// A named individual. Types and assertions are kept sorted; exact
/// duplicate assertions are allowed and stay adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    id: Iri,
    types: Vec<Iri>,
    data: Vec<DataAssertion>,
    objects: Vec<ObjectAssertion>,
}

impl Individual {
    pub fn new(id: Iri, class: Iri) -> Self {
        Individual {
            id,
            types: vec![class],
            data: Vec::new(),
            objects: Vec::new(),
        }
    }

    /// An individual with no types yet; only meaningful as an intermediate.
    pub fn untyped(id: Iri) -> Self {
        Individual {
            id,
            types: Vec::new(),
            data: Vec::new(),
            objects: Vec::new(),
        }
    }

    pub fn id(&self) -> &Iri {
        &self.id
    }

    pub fn types(&self) -> &[Iri] {
        &self.types
    }

    pub fn data_assertions(&self) -> &[DataAssertion] {
        &self.data
    }

    pub fn object_assertions(&self) -> &[ObjectAssertion] {
        &self.objects
    }

    pub fn assertion_count(&self) -> usize {
        self.data.len() + self.objects.len()
    }

    pub fn add_type(&mut self, class: Iri) {
        if let Err(at) = self.types.binary_search(&class) {
            self.types.insert(at, class);
        }
    }

    pub fn with_type(mut self, class: Iri) -> Self {
        self.add_type(class);
        self
    }

    pub fn add_data(&mut self, property: Iri, value: Literal) {
        let a = DataAssertion { property, value };
        let at = self.data.partition_point(|x| x <= &a);
        self.data.insert(at, a);
    }

    pub fn with_data(mut self, property: Iri, value: Literal) -> Self {
        self.add_data(property, value);
        self
    }

    pub fn add_object(&mut self, property: Iri, target: Iri) {
        let a = ObjectAssertion { property, target };
        let at = self.objects.partition_point(|x| x <= &a);
        self.objects.insert(at, a);
    }

    pub fn with_object(mut self, property: Iri, target: Iri) -> Self {
        self.add_object(property, target);
        self
    }

    pub fn retain_types(&mut self, f: impl FnMut(&Iri) -> bool) {
        self.types.retain(f);
    }

    pub fn retain_data(&mut self, f: impl FnMut(&DataAssertion) -> bool) {
        self.data.retain(f);
    }

    pub fn retain_objects(&mut self, f: impl FnMut(&ObjectAssertion) -> bool) {
        self.objects.retain(f);
    }

    /// Union of types and assertions; exact duplicates are collapsed.
    pub(crate) fn absorb(&mut self, other: &Individual) {
        for t in &other.types {
            self.add_type(t.clone());
        }
        for d in &other.data {
            if self.data.binary_search(d).is_err() {
                self.add_data(d.property.clone(), d.value.clone());
            }
        }
        for o in &other.objects {
            if self.objects.binary_search(o).is_err() {
                self.add_object(o.property.clone(), o.target.clone());
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyKind {
    Object,
    Datatype,
}

/// Schema (classes, properties) plus extension (individuals).
///
/// Every category is kept sorted by IRI, so two ontologies with the same
/// content compare equal and serialize identically. Duplicate IRIs within a
/// category are representable (and reported by [`Ontology::validate`]).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ontology {
    header: Option<Header>,
    namespaces: NamespaceMap,
    classes: Vec<ClassDef>,
    object_properties: Vec<ObjectPropertyDef>,
    datatype_properties: Vec<DatatypePropertyDef>,
    individuals: Vec<Individual>,
}

fn sorted_insert<T>(v: &mut Vec<T>, item: T, key: impl Fn(&T) -> &Iri) {
    let at = v.partition_point(|x| key(x) <= key(&item));
    v.insert(at, item);
}

fn find<'a, T>(v: &'a [T], iri: &Iri, key: impl Fn(&T) -> &Iri) -> Option<&'a T> {
    let at = v.partition_point(|x| key(x) < iri);
    v.get(at).filter(|x| key(x) == iri)
}

impl Ontology {
    pub fn new(namespaces: NamespaceMap) -> Self {
        Ontology {
            namespaces,
            ..Default::default()
        }
    }

    pub fn header(&self) -> Option<&Header> {
        self.header.as_ref()
    }

    pub fn set_header(&mut self, header: Option<Header>) {
        self.header = header;
    }

    pub fn namespaces(&self) -> &NamespaceMap {
        &self.namespaces
    }

    pub fn namespaces_mut(&mut self) -> &mut NamespaceMap {
        &mut self.namespaces
    }

    pub fn classes(&self) -> &[ClassDef] {
        &self.classes
    }

    pub fn object_properties(&self) -> &[ObjectPropertyDef] {
        &self.object_properties
    }

    pub fn datatype_properties(&self) -> &[DatatypePropertyDef] {
        &self.datatype_properties
    }

    pub fn individuals(&self) -> &[Individual] {
        &self.individuals
    }

    pub fn class(&self, iri: &Iri) -> Option<&ClassDef> {
        find(&self.classes, iri, |c| &c.id)
    }

    pub fn object_property(&self, iri: &Iri) -> Option<&ObjectPropertyDef> {
        find(&self.object_properties, iri, |p| &p.id)
    }

    pub fn datatype_property(&self, iri: &Iri) -> Option<&DatatypePropertyDef> {
        find(&self.datatype_properties, iri, |p| &p.id)
    }

    pub fn individual(&self, iri: &Iri) -> Option<&Individual> {
        find(&self.individuals, iri, |i| &i.id)
    }

    pub fn property_kind(&self, iri: &Iri) -> Option<PropertyKind> {
        if self.object_property(iri).is_some() {
            Some(PropertyKind::Object)
        } else if self.datatype_property(iri).is_some() {
            Some(PropertyKind::Datatype)
        } else {
            None
        }
    }

    pub fn add_class(&mut self, mut class: ClassDef) {
        class.normalize();
        sorted_insert(&mut self.classes, class, |c| &c.id);
    }

    pub fn add_object_property(&mut self, p: ObjectPropertyDef) {
        sorted_insert(&mut self.object_properties, p, |p| &p.id);
    }

    pub fn add_datatype_property(&mut self, p: DatatypePropertyDef) {
        sorted_insert(&mut self.datatype_properties, p, |p| &p.id);
    }

    pub fn add_individual(&mut self, ind: Individual) {
        sorted_insert(&mut self.individuals, ind, |i| &i.id);
    }

    pub fn remove_individual(&mut self, iri: &Iri) -> Option<Individual> {
        let at = self.individuals.partition_point(|x| &x.id < iri);
        if self.individuals.get(at).is_some_and(|x| &x.id == iri) {
            Some(self.individuals.remove(at))
        } else {
            None
        }
    }

    pub fn retain_classes(&mut self, f: impl FnMut(&ClassDef) -> bool) {
        self.classes.retain(f);
    }

    pub fn retain_object_properties(&mut self, f: impl FnMut(&ObjectPropertyDef) -> bool) {
        self.object_properties.retain(f);
    }

    pub fn retain_datatype_properties(&mut self, f: impl FnMut(&DatatypePropertyDef) -> bool) {
        self.datatype_properties.retain(f);
    }

    pub fn retain_individuals(&mut self, f: impl FnMut(&Individual) -> bool) {
        self.individuals.retain(f);
    }

    /// Mutable access to each individual. The IRI cannot change, and the
    /// `retain_*` / `add_*` helpers preserve the sorted invariants.
    pub fn individuals_mut(&mut self) -> impl Iterator<Item = &mut Individual> {
        self.individuals.iter_mut()
    }

    pub(crate) fn individual_mut(&mut self, iri: &Iri) -> Option<&mut Individual> {
        let at = self.individuals.partition_point(|x| &x.id < iri);
        self.individuals.get_mut(at).filter(|x| &x.id == iri)
    }

    pub(crate) fn class_mut(&mut self, iri: &Iri) -> Option<&mut ClassDef> {
        let at = self.classes.partition_point(|x| &x.id < iri);
        self.classes.get_mut(at).filter(|x| &x.id == iri)
    }

    pub fn assertion_count(&self) -> usize {
        self.individuals
            .iter()
            .map(Individual::assertion_count)
            .sum()
    }

    /// Namespaces, header, classes and properties of `self`, with no individuals.
    pub fn copy_structure(&self) -> Ontology {
        Ontology {
            header: self.header.clone(),
            namespaces: self.namespaces.clone(),
            classes: self.classes.clone(),
            object_properties: self.object_properties.clone(),
            datatype_properties: self.datatype_properties.clone(),
            individuals: Vec::new(),
        }
    }

    /// The schema-only view used for schema equality checks.
    pub fn schema_eq(&self, other: &Ontology) -> bool {
        self.header == other.header
            && self.namespaces == other.namespaces
            && self.classes == other.classes
            && self.object_properties == other.object_properties
            && self.datatype_properties == other.datatype_properties
    }

    /// Every `(source individual, property)` whose object assertion targets `target`.
    pub fn references_to(&self, target: &Iri) -> Vec<(Iri, Iri)> {
        self.individuals
            .iter()
            .flat_map(|ind| {
                ind.objects
                    .iter()
                    .filter(move |a| &a.target == target)
                    .map(move |a| (ind.id.clone(), a.property.clone()))
            })
            .collect()
    }

    /// `class` and all its declared ancestors (cycle-safe).
    pub fn ancestors_or_self(&self, class: &Iri) -> BTreeSet<Iri> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([class.clone()]);
        while let Some(c) = queue.pop_front() {
            if !seen.insert(c.clone()) {
                continue;
            }
            if let Some(def) = self.class(&c) {
                queue.extend(def.super_classes.iter().cloned());
            }
        }
        seen
    }

    /// Properties whose domain is exactly `class`, object then datatype.
    pub fn properties_of(&self, class: &Iri) -> Vec<&Iri> {
        self.object_properties
            .iter()
            .filter(|p| &p.domain == class)
            .map(|p| &p.id)
            .chain(
                self.datatype_properties
                    .iter()
                    .filter(|p| &p.domain == class)
                    .map(|p| &p.id),
            )
            .collect()
    }
}

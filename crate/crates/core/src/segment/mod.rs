//! Horizontal, vertical and hybrid segmentation.
//!
//! Every operation returns a purified ontology that validates on its own,
//! together with a [`PurgeReport`] of what purification and projection
//! removed. Individuals rejected by a filter are not part of the report.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::filter::{EvalError, Evaluator, FilterExpr};
use crate::model::{ClassDef, Iri, Ontology, PropertyKind};

mod purify;

pub use purify::purify;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum BridgePolicy {
    /// Classes referenced from the kept part are declared as external stubs.
    #[default]
    Stub,
    /// Links leaving the kept part are dropped.
    Drop,
}

/// What to keep. A `None` keep-set keeps everything in that category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SegmentSpec {
    pub keep_classes: Option<BTreeSet<Iri>>,
    pub keep_object_properties: Option<BTreeSet<Iri>>,
    pub keep_datatype_properties: Option<BTreeSet<Iri>>,
    pub filter: Option<FilterExpr>,
    pub bridge_policy: BridgePolicy,
}

impl SegmentSpec {
    pub fn is_empty(&self) -> bool {
        self.keep_classes.is_none()
            && self.keep_object_properties.is_none()
            && self.keep_datatype_properties.is_none()
            && self.filter.is_none()
    }

    fn has_property_sets(&self) -> bool {
        self.keep_object_properties.is_some() || self.keep_datatype_properties.is_some()
    }
}

/// Everything removed from the extension, in IRI order of the source individual.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PurgeReport {
    /// `(source, property, target)`
    pub removed_object_assertions: Vec<(Iri, Iri, Iri)>,
    /// `(source, property)`
    pub removed_data_assertions: Vec<(Iri, Iri)>,
    pub removed_individuals: Vec<Iri>,
    /// `(individual, class)`
    pub removed_type_entries: Vec<(Iri, Iri)>,
}

impl PurgeReport {
    pub fn is_empty(&self) -> bool {
        self.removed_object_assertions.is_empty()
            && self.removed_data_assertions.is_empty()
            && self.removed_individuals.is_empty()
            && self.removed_type_entries.is_empty()
    }

    /// Appends `other` and restores IRI order.
    pub fn extend(&mut self, other: PurgeReport) {
        self.removed_object_assertions
            .extend(other.removed_object_assertions);
        self.removed_data_assertions
            .extend(other.removed_data_assertions);
        self.removed_individuals.extend(other.removed_individuals);
        self.removed_type_entries.extend(other.removed_type_entries);
        self.removed_object_assertions.sort();
        self.removed_data_assertions.sort();
        self.removed_individuals.sort();
        self.removed_type_entries.sort();
    }

    /// `removed: <obj> object, <data> data, <ind> individuals, <types> type entries`
    pub fn summary(&self) -> String {
        format!(
            "removed: {} object assertions, {} data assertions, {} individuals, {} type entries",
            self.removed_object_assertions.len(),
            self.removed_data_assertions.len(),
            self.removed_individuals.len(),
            self.removed_type_entries.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("unknown class {0}")]
    UnknownClass(Iri),
    #[error("unknown {expected} property {iri}")]
    UnknownProperty { iri: Iri, expected: &'static str },
    #[error("segment spec selects nothing")]
    EmptySpec,
    #[error("{0}")]
    InvalidSpec(&'static str),
    #[error(transparent)]
    Filter(#[from] EvalError),
}

/// Keeps the schema and the individuals satisfying `f`, evaluated against
/// `src` before anything is removed.
pub fn segment_horizontal(
    src: &Ontology,
    f: &FilterExpr,
) -> Result<(Ontology, PurgeReport), EvalError> {
    let eval = Evaluator::new(f, src)?;
    let mut out = src.copy_structure();
    for ind in src.individuals() {
        if eval.eval(ind) {
            out.add_individual(ind.clone());
        }
    }
    Ok(purify(out))
}

/// Copies the individuals of `src` into `schema`, keeping only the type
/// entries accepted by `allowed`; individuals left untyped are skipped.
/// Assertions are copied as is and left for [`purify`].
pub fn populate(
    schema: &Ontology,
    src: &Ontology,
    allowed: impl Fn(&Iri) -> bool,
) -> (Ontology, PurgeReport) {
    let mut out = schema.copy_structure();
    let mut report = PurgeReport::default();
    for ind in src.individuals() {
        let mut ind = ind.clone();
        let id = ind.id().clone();
        ind.retain_types(|t| {
            let keep = allowed(t);
            if !keep {
                report.removed_type_entries.push((id.clone(), t.clone()));
            }
            keep
        });
        if ind.types().is_empty() {
            report.removed_individuals.push(id);
        } else {
            out.add_individual(ind);
        }
    }
    (out, report)
}

fn check_properties(
    src: &Ontology,
    keep: &BTreeSet<Iri>,
    kind: PropertyKind,
) -> Result<(), SegmentError> {
    for p in keep {
        if src.property_kind(p) != Some(kind) {
            return Err(SegmentError::UnknownProperty {
                iri: p.clone(),
                expected: match kind {
                    PropertyKind::Object => "object",
                    PropertyKind::Datatype => "datatype",
                },
            });
        }
    }
    Ok(())
}

fn stub_references(o: &Ontology) -> BTreeSet<&Iri> {
    let mut refs = BTreeSet::new();
    for c in o.classes() {
        refs.extend(c.super_classes.iter());
    }
    for p in o.object_properties() {
        refs.insert(&p.domain);
        refs.insert(&p.range);
    }
    for p in o.datatype_properties() {
        refs.insert(&p.domain);
    }
    for ind in o.individuals() {
        refs.extend(ind.types().iter());
    }
    refs
}

/// Keeps every class and only the listed properties; individuals stay and
/// lose the assertions of dropped properties.
pub fn segment_vertical_properties(
    src: &Ontology,
    keep_dp: &BTreeSet<Iri>,
    keep_op: &BTreeSet<Iri>,
) -> Result<(Ontology, PurgeReport), SegmentError> {
    check_properties(src, keep_dp, PropertyKind::Datatype)?;
    check_properties(src, keep_op, PropertyKind::Object)?;

    let mut schema = src.copy_structure();
    schema.retain_object_properties(|p| keep_op.contains(&p.id));
    schema.retain_datatype_properties(|p| keep_dp.contains(&p.id));

    // stubs that only served a dropped property go with it
    let before: BTreeSet<Iri> = stub_references(src).into_iter().cloned().collect();
    let mut after: BTreeSet<Iri> = stub_references(&schema).into_iter().cloned().collect();
    for ind in src.individuals() {
        after.extend(ind.types().iter().cloned());
    }
    schema.retain_classes(|c| !c.external || !before.contains(&c.id) || after.contains(&c.id));

    let (populated, mut report) = populate(&schema, src, |t| schema.class(t).is_some());
    let (out, purged) = purify(populated);
    report.extend(purged);
    Ok((out, report))
}

/// Keeps the listed classes, the properties whose domain is kept, and the
/// individuals that still have a kept type once other types are pruned.
///
/// Under [`BridgePolicy::Stub`] an object property whose range is not kept
/// survives with its range declared as an external stub, and so does a
/// superclass edge leaving the kept set. Under [`BridgePolicy::Drop`] both
/// are removed.
pub fn segment_vertical_classes(
    src: &Ontology,
    keep: &BTreeSet<Iri>,
    policy: BridgePolicy,
) -> Result<(Ontology, PurgeReport), SegmentError> {
    if let Some(c) = keep.iter().find(|c| src.class(c).is_none()) {
        return Err(SegmentError::UnknownClass(c.clone()));
    }
    let stub = policy == BridgePolicy::Stub;

    let mut schema = src.copy_structure();
    schema.retain_classes(|c| keep.contains(&c.id));
    schema.retain_object_properties(|p| {
        keep.contains(&p.domain) && (stub || keep.contains(&p.range))
    });
    schema.retain_datatype_properties(|p| keep.contains(&p.domain));

    let mut stubs: BTreeSet<Iri> = BTreeSet::new();
    for id in keep {
        let class = schema.class_mut(id).expect("kept class is declared");
        if stub {
            stubs.extend(
                class
                    .super_classes
                    .iter()
                    .filter(|s| !keep.contains(*s))
                    .cloned(),
            );
        } else {
            class.super_classes.retain(|s| keep.contains(s));
        }
    }
    stubs.extend(
        schema
            .object_properties()
            .iter()
            .filter(|p| !keep.contains(&p.range))
            .map(|p| p.range.clone()),
    );
    for s in stubs {
        schema.add_class(ClassDef::stub(s));
    }

    let (populated, mut report) = populate(&schema, src, |t| keep.contains(t));
    let (out, purged) = purify(populated);
    report.extend(purged);
    Ok((out, report))
}

/// Class projection followed by property projection. Property keep-sets are
/// checked against `src`, then narrowed to what the class stage kept.
pub fn segment_hybrid(
    src: &Ontology,
    spec: &SegmentSpec,
) -> Result<(Ontology, PurgeReport), SegmentError> {
    if spec.filter.is_some() {
        return Err(SegmentError::InvalidSpec(
            "hybrid segmentation takes no filter; use full_hybrid",
        ));
    }
    vertical(src, spec)
}

fn vertical(src: &Ontology, spec: &SegmentSpec) -> Result<(Ontology, PurgeReport), SegmentError> {
    if let Some(dp) = &spec.keep_datatype_properties {
        check_properties(src, dp, PropertyKind::Datatype)?;
    }
    if let Some(op) = &spec.keep_object_properties {
        check_properties(src, op, PropertyKind::Object)?;
    }

    let (mut current, mut report) = match &spec.keep_classes {
        Some(keep) => segment_vertical_classes(src, keep, spec.bridge_policy)?,
        None => purify(src.clone()),
    };
    if spec.has_property_sets() {
        let narrow = |keep: &Option<BTreeSet<Iri>>, declared: Vec<&Iri>| -> BTreeSet<Iri> {
            declared
                .into_iter()
                .filter(|p| keep.as_ref().is_none_or(|k| k.contains(*p)))
                .cloned()
                .collect()
        };
        let dp = narrow(
            &spec.keep_datatype_properties,
            current
                .datatype_properties()
                .iter()
                .map(|p| &p.id)
                .collect(),
        );
        let op = narrow(
            &spec.keep_object_properties,
            current.object_properties().iter().map(|p| &p.id).collect(),
        );
        let (next, r) = segment_vertical_properties(&current, &dp, &op)?;
        current = next;
        report.extend(r);
    }
    Ok((current, report))
}

/// Vertical stages first, then the filter on what they produced. A filter
/// naming a property the vertical stages removed is an error.
pub fn full_hybrid(
    src: &Ontology,
    spec: &SegmentSpec,
) -> Result<(Ontology, PurgeReport), SegmentError> {
    let (vertical_out, mut report) = vertical(src, spec)?;
    let Some(f) = &spec.filter else {
        return Ok((vertical_out, report));
    };
    let (out, r) = segment_horizontal(&vertical_out, f)?;
    report.extend(r);
    Ok((out, report))
}

/// Runs whatever `spec` asks for: class projection, property projection,
/// then the filter.
pub fn segment(
    src: &Ontology,
    spec: &SegmentSpec,
) -> Result<(Ontology, PurgeReport), SegmentError> {
    if spec.is_empty() {
        return Err(SegmentError::EmptySpec);
    }
    full_hybrid(src, spec)
}

#[cfg(test)]
mod tests;

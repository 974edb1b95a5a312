use std::collections::BTreeSet;

use super::PurgeReport;
use crate::model::{Iri, Ontology, PropertyKind};

/// Makes `o` valid against its own schema in one pass:
///
/// 1. type entries naming undeclared classes are dropped, and an individual
///    left with no types is removed;
/// 2. assertions whose property is not declared (with the right kind) are
///    dropped;
/// 3. object assertions whose target is not a surviving individual are
///    dropped.
///
/// Removing an assertion never removes its source individual.
pub fn purify(mut o: Ontology) -> (Ontology, PurgeReport) {
    let mut report = PurgeReport::default();

    let class_ids: BTreeSet<Iri> = o.classes().iter().map(|c| c.id.clone()).collect();
    for ind in o.individuals_mut() {
        let id = ind.id().clone();
        ind.retain_types(|t| {
            let keep = class_ids.contains(t);
            if !keep {
                report.removed_type_entries.push((id.clone(), t.clone()));
            }
            keep
        });
    }
    o.retain_individuals(|ind| {
        let keep = !ind.types().is_empty();
        if !keep {
            report.removed_individuals.push(ind.id().clone());
        }
        keep
    });

    let survivors: BTreeSet<Iri> = o.individuals().iter().map(|i| i.id().clone()).collect();
    let kinds: Vec<_> = o
        .individuals()
        .iter()
        .map(|ind| {
            let data: Vec<bool> = ind
                .data_assertions()
                .iter()
                .map(|a| o.property_kind(&a.property) == Some(PropertyKind::Datatype))
                .collect();
            let objects: Vec<bool> = ind
                .object_assertions()
                .iter()
                .map(|a| {
                    o.property_kind(&a.property) == Some(PropertyKind::Object)
                        && survivors.contains(&a.target)
                })
                .collect();
            (data, objects)
        })
        .collect();

    for (ind, (data_ok, objects_ok)) in o.individuals_mut().zip(kinds) {
        let id = ind.id().clone();
        let mut ok = data_ok.into_iter();
        ind.retain_data(|a| {
            let keep = ok.next().unwrap();
            if !keep {
                report
                    .removed_data_assertions
                    .push((id.clone(), a.property.clone()));
            }
            keep
        });
        let mut ok = objects_ok.into_iter();
        ind.retain_objects(|a| {
            let keep = ok.next().unwrap();
            if !keep {
                report.removed_object_assertions.push((
                    id.clone(),
                    a.property.clone(),
                    a.target.clone(),
                ));
            }
            keep
        });
    }
    (o, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ClassDef, Individual, NamespaceMap, ObjectPropertyDef};

    fn iri(local: &str) -> Iri {
        Iri::new(format!("urn:t#{local}")).unwrap()
    }

    fn couple() -> Ontology {
        let mut o = Ontology::new(NamespaceMap::new());
        o.add_class(ClassDef::new(iri("Person")));
        o.add_object_property(ObjectPropertyDef {
            id: iri("isMarriedTo"),
            domain: iri("Person"),
            range: iri("Person"),
        });
        o.add_individual(
            Individual::new(iri("x"), iri("Person")).with_object(iri("isMarriedTo"), iri("y")),
        );
        o.add_individual(
            Individual::new(iri("y"), iri("Person")).with_object(iri("isMarriedTo"), iri("x")),
        );
        o
    }

    #[test]
    fn dangling_assertion_removed_source_kept() {
        let mut o = couple();
        o.remove_individual(&iri("x"));
        let (p, report) = purify(o);
        assert!(p.validate().is_valid());
        assert_eq!(
            report.removed_object_assertions,
            vec![(iri("y"), iri("isMarriedTo"), iri("x"))]
        );
        assert!(report.removed_individuals.is_empty());
        assert_eq!(p.individual(&iri("y")).unwrap().assertion_count(), 0);
    }

    #[test]
    fn valid_input_is_untouched() {
        let (p, report) = purify(couple());
        assert_eq!(p, couple());
        assert!(report.is_empty());
    }

    #[test]
    fn undeclared_types_and_properties() {
        let mut o = couple();
        o.add_individual(Individual::new(iri("ghost"), iri("Alien")));
        o.add_individual(
            Individual::new(iri("z"), iri("Person"))
                .with_type(iri("Alien"))
                .with_object(iri("knows"), iri("x"))
                .with_object(iri("isMarriedTo"), iri("ghost")),
        );
        let (p, report) = purify(o);
        assert!(p.validate().is_valid());
        assert_eq!(report.removed_individuals, vec![iri("ghost")]);
        assert_eq!(
            report.removed_type_entries,
            vec![(iri("ghost"), iri("Alien")), (iri("z"), iri("Alien"))]
        );
        assert_eq!(report.removed_object_assertions.len(), 2);
    }
}

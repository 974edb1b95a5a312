use super::*;
use crate::filter::{parse_filter, EvalErrorKind};
use crate::fixtures::{build_citizen_schema, citizen, generate_population, PopulationParams};

fn set(names: &[&str]) -> BTreeSet<Iri> {
    names.iter().map(|n| citizen(n)).collect()
}

fn population() -> Ontology {
    generate_population(
        &build_citizen_schema(),
        &PopulationParams::new(120, 4, 2, 3),
    )
    .unwrap()
    .0
}

const SCHOOL_CLASSES: [&str; 6] = ["Person", "Man", "Woman", "City", "Country", "Email"];
const SCHOOL_PERSON_PROPS: [&str; 8] = [
    "hasAsFather",
    "hasAsMother",
    "lastName",
    "firstName",
    "dateOfBirth",
    "livesIn",
    "personAddress",
    "hasEmail",
];

fn school_spec() -> SegmentSpec {
    let props = set(&SCHOOL_PERSON_PROPS);
    let src = build_citizen_schema();
    SegmentSpec {
        keep_classes: Some(set(&SCHOOL_CLASSES)),
        keep_object_properties: Some(
            props
                .iter()
                .filter(|p| src.object_property(p).is_some())
                .cloned()
                .collect(),
        ),
        keep_datatype_properties: Some(
            props
                .iter()
                .filter(|p| src.datatype_property(p).is_some())
                .cloned()
                .collect(),
        ),
        ..SegmentSpec::default()
    }
}

fn class_ids(o: &Ontology) -> BTreeSet<Iri> {
    o.classes().iter().map(|c| c.id.clone()).collect()
}

fn all_properties(o: &Ontology) -> (BTreeSet<Iri>, BTreeSet<Iri>) {
    (
        o.datatype_properties()
            .iter()
            .map(|p| p.id.clone())
            .collect(),
        o.object_properties().iter().map(|p| p.id.clone()).collect(),
    )
}

#[test]
fn horizontal_true_and_false() {
    let src = population();
    let (all, report) = segment_horizontal(&src, &FilterExpr::True).unwrap();
    assert_eq!(all, src);
    assert!(report.is_empty());
    let (none, _) = segment_horizontal(&src, &FilterExpr::False).unwrap();
    assert_eq!(none, src.copy_structure());
}

#[test]
fn horizontal_keeps_schema_and_validates() {
    let src = population();
    let f = parse_filter("livesIn = :City1", src.namespaces()).unwrap();
    let (seg, report) = segment_horizontal(&src, &f).unwrap();
    assert!(seg.schema_eq(&src));
    assert!(seg.validate().is_valid());
    // the city itself is not selected, so every livesIn edge is purged
    assert_eq!(
        report
            .removed_object_assertions
            .iter()
            .filter(|(_, p, _)| p == &citizen("livesIn"))
            .count(),
        seg.individuals().len()
    );
}

#[test]
fn vertical_properties_projects_person() {
    let src = population();
    let (dp, op) = all_properties(&src);
    let (dp, op): (BTreeSet<Iri>, BTreeSet<Iri>) = (
        dp.intersection(&set(&SCHOOL_PERSON_PROPS))
            .cloned()
            .collect(),
        op.intersection(&set(&SCHOOL_PERSON_PROPS))
            .cloned()
            .collect(),
    );
    let (seg, _) = segment_vertical_properties(&src, &dp, &op).unwrap();
    let person: BTreeSet<Iri> = seg
        .properties_of(&citizen("Person"))
        .into_iter()
        .cloned()
        .collect();
    assert_eq!(person, set(&SCHOOL_PERSON_PROPS));
    assert_eq!(seg.classes(), src.classes());
    assert_eq!(seg.individuals().len(), src.individuals().len());
    assert!(seg.validate().is_valid());
}

#[test]
fn vertical_properties_keep_all_and_none() {
    let src = population();
    let (dp, op) = all_properties(&src);
    let (seg, report) = segment_vertical_properties(&src, &dp, &op).unwrap();
    assert_eq!(seg, src);
    assert!(report.is_empty());

    let empty = BTreeSet::new();
    let (seg, report) = segment_vertical_properties(&src, &empty, &empty).unwrap();
    assert_eq!(seg.classes(), src.classes());
    assert_eq!(seg.assertion_count(), 0);
    assert_eq!(seg.individuals().len(), src.individuals().len());
    assert_eq!(
        report.removed_data_assertions.len() + report.removed_object_assertions.len(),
        src.assertion_count()
    );
}

#[test]
fn vertical_properties_rejects_unknown() {
    let src = population();
    let err = segment_vertical_properties(&src, &set(&["livesIn"]), &BTreeSet::new());
    assert!(matches!(err, Err(SegmentError::UnknownProperty { .. })));
}

#[test]
fn vertical_classes_drop_and_stub() {
    let src = population();
    let keep = set(&SCHOOL_CLASSES);

    let (seg, _) = segment_vertical_classes(&src, &keep, BridgePolicy::Drop).unwrap();
    assert_eq!(class_ids(&seg), keep);
    assert!(seg.object_property(&citizen("hasBankAccount")).is_none());
    assert!(seg.validate().is_valid());

    let (seg, _) = segment_vertical_classes(&src, &keep, BridgePolicy::Stub).unwrap();
    assert!(seg.object_property(&citizen("hasBankAccount")).is_some());
    let bank = seg.class(&citizen("BankAccount")).unwrap();
    assert!(bank.external);
    assert!(seg.properties_of(&citizen("BankAccount")).is_empty());
    assert!(seg.validate().is_valid());
}

#[test]
fn vertical_classes_stub_superclass() {
    let src = population();
    let keep = set(&["Man", "City", "Country"]);
    let (seg, report) = segment_vertical_classes(&src, &keep, BridgePolicy::Stub).unwrap();
    assert!(seg.class(&citizen("Person")).unwrap().external);
    assert_eq!(
        seg.class(&citizen("Man")).unwrap().super_classes,
        vec![citizen("Person")]
    );
    // women lose their only type
    assert!(seg
        .individuals()
        .iter()
        .all(|i| i.types() != [citizen("Woman")]));
    assert!(!report.removed_individuals.is_empty());

    let (seg, _) = segment_vertical_classes(&src, &keep, BridgePolicy::Drop).unwrap();
    assert!(seg.class(&citizen("Man")).unwrap().super_classes.is_empty());
    assert!(seg.class(&citizen("Person")).is_none());
    assert!(seg.validate().is_valid());
}

#[test]
fn vertical_classes_keep_all_and_unknown() {
    let src = population();
    let (seg, report) =
        segment_vertical_classes(&src, &class_ids(&src), BridgePolicy::Stub).unwrap();
    assert_eq!(seg, src);
    assert!(report.is_empty());
    assert!(matches!(
        segment_vertical_classes(&src, &set(&["Planet"]), BridgePolicy::Stub),
        Err(SegmentError::UnknownClass(_))
    ));
}

#[test]
fn hybrid_school_segment() {
    let src = population();
    let (seg, _) = segment_hybrid(&src, &school_spec()).unwrap();
    assert_eq!(class_ids(&seg), set(&SCHOOL_CLASSES));
    let person: BTreeSet<Iri> = seg
        .properties_of(&citizen("Person"))
        .into_iter()
        .cloned()
        .collect();
    assert_eq!(person, set(&SCHOOL_PERSON_PROPS));
    assert!(seg.validate().is_valid());
}

#[test]
fn hybrid_keep_everything_and_filter_rules() {
    let src = population();
    let (dp, op) = all_properties(&src);
    let spec = SegmentSpec {
        keep_classes: Some(class_ids(&src)),
        keep_datatype_properties: Some(dp),
        keep_object_properties: Some(op),
        ..SegmentSpec::default()
    };
    assert_eq!(segment_hybrid(&src, &spec).unwrap().0, src);

    let with_true = SegmentSpec {
        filter: Some(FilterExpr::True),
        ..spec.clone()
    };
    assert!(matches!(
        segment_hybrid(&src, &with_true),
        Err(SegmentError::InvalidSpec(_))
    ));
    assert_eq!(full_hybrid(&src, &with_true).unwrap().0, src);
}

#[test]
fn full_hybrid_filter_on_dropped_property() {
    let src = population();
    let mut spec = school_spec();
    spec.filter = Some(parse_filter("studiesIn = :School0", src.namespaces()).unwrap());
    match full_hybrid(&src, &spec) {
        Err(SegmentError::Filter(e)) => assert_eq!(e.kind, EvalErrorKind::UnknownProperty),
        other => panic!("{other:?}"),
    }
}

#[test]
fn empty_spec_is_rejected() {
    assert_eq!(
        segment(&population(), &SegmentSpec::default()),
        Err(SegmentError::EmptySpec)
    );
}

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{c, fixture};
use owlseg::assembly::{diff, merge};
use owlseg::filter::parse_filter;
use owlseg::model::{Iri, Ontology};
use owlseg::rdfxml::serialize;
use owlseg::segment::{
    segment_horizontal, segment_vertical_classes, segment_vertical_properties, BridgePolicy,
};

fn horizontal(src: &Ontology, text: &str) -> Ontology {
    segment_horizontal(src, &parse_filter(text, src.namespaces()).unwrap())
        .unwrap()
        .0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn property_partition_merges_back(seed in any::<u64>(), parts in 1usize..5, labels in prop::collection::vec(0usize..4, 25)) {
        let (src, _) = fixture(150, 4, 2, seed);
        let mut segments = Vec::new();
        for part in 0..parts {
            let mine = |i: usize| labels[i % labels.len()] % parts == part;
            let dp: BTreeSet<Iri> = src.datatype_properties().iter().enumerate()
                .filter(|(i, _)| mine(*i)).map(|(_, p)| p.id.clone()).collect();
            let op: BTreeSet<Iri> = src.object_properties().iter().enumerate()
                .filter(|(i, _)| mine(*i + 13)).map(|(_, p)| p.id.clone()).collect();
            segments.push(segment_vertical_properties(&src, &dp, &op).unwrap().0);
        }
        let whole = merge(&segments).unwrap();
        prop_assert_eq!(&whole, &src);
        prop_assert_eq!(serialize(&whole), serialize(&src));
    }

    #[test]
    fn class_cover_merges_schema_back(seed in any::<u64>(), labels in prop::collection::vec(0usize..3, 10)) {
        let (src, _) = fixture(100, 3, 2, seed);
        let mut segments = Vec::new();
        for part in 0..3 {
            let keep: BTreeSet<Iri> = src.classes().iter().enumerate()
                .filter(|(i, _)| labels[*i] == part).map(|(_, c)| c.id.clone()).collect();
            segments.push(segment_vertical_classes(&src, &keep, BridgePolicy::Stub).unwrap().0);
        }
        let whole = merge(&segments).unwrap();
        prop_assert!(whole.schema_eq(&src));
        prop_assert!(whole.validate().is_valid());
    }

    #[test]
    fn merge_is_associative_and_commutative(seed in any::<u64>(), k in 0usize..4) {
        let (src, _) = fixture(120, 4, 2, seed);
        let a = horizontal(&src, &format!("livesIn = :City{k}"));
        let b = horizontal(&src, "type = :Woman");
        let cc = horizontal(&src, "type = :City or type = :Country");
        let abc = merge(&[a.clone(), b.clone(), cc.clone()]).unwrap();
        prop_assert_eq!(&merge(&[cc.clone(), a.clone(), b.clone()]).unwrap(), &abc);
        prop_assert_eq!(&merge(&[b.clone(), cc.clone(), a.clone()]).unwrap(), &abc);
        let ab = merge(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(&merge(&[ab, cc.clone()]).unwrap(), &abc);
        prop_assert!(diff(&a, &abc).individuals.removed.is_empty());
        prop_assert!(diff(&a, &abc).schema_unchanged());
    }
}

#[test]
fn school_and_complement_restore_ten_classes() {
    let (src, _) = fixture(200, 4, 2, 4);
    let school: BTreeSet<Iri> = ["Person", "Man", "Woman", "City", "Country", "Email"]
        .map(c)
        .into();
    let rest: BTreeSet<Iri> = ["BankAccount", "School", "Club", "Party"].map(c).into();
    let a = segment_vertical_classes(&src, &school, BridgePolicy::Stub)
        .unwrap()
        .0;
    let b = segment_vertical_classes(&src, &rest, BridgePolicy::Stub)
        .unwrap()
        .0;
    let whole = merge(&[a, b]).unwrap();
    let classes: BTreeSet<Iri> = whole.classes().iter().map(|c| c.id.clone()).collect();
    assert_eq!(classes, school.union(&rest).cloned().collect());
    assert!(whole.classes().iter().all(|c| !c.external));
}

#[test]
fn diff_is_symmetric() {
    let (src, _) = fixture(100, 3, 1, 12);
    let seg = horizontal(&src, "type = :Man");
    let school: BTreeSet<Iri> = ["Person", "Man", "City"].map(c).into();
    let vseg = segment_vertical_classes(&src, &school, BridgePolicy::Stub)
        .unwrap()
        .0;
    for other in [&seg, &vseg] {
        assert_eq!(diff(other, &src), diff(&src, other).reversed());
    }
    assert!(diff(&src, &src).is_empty());
}

//! Naive reference implementations used as test oracles. They share no
//! code with the library beyond the model accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use owlseg::filter::{CompareOp, FilterExpr};
use owlseg::fixtures::{
    build_citizen_schema, citizen, generate_population, AllocationTable, PopulationParams,
};
use owlseg::model::{Datatype, Individual, Iri, Literal, Ontology};

pub fn fixture(
    n: usize,
    cities: usize,
    countries: usize,
    seed: u64,
) -> (Ontology, AllocationTable) {
    generate_population(
        &build_citizen_schema(),
        &PopulationParams::new(n, cities, countries, seed),
    )
    .unwrap()
}

fn is_ancestor_or_self(o: &Ontology, class: &Iri, of: &Iri) -> bool {
    let mut stack = vec![of.clone()];
    let mut seen = BTreeSet::new();
    while let Some(c) = stack.pop() {
        if &c == class {
            return true;
        }
        if !seen.insert(c.clone()) {
            continue;
        }
        for def in o.classes() {
            if def.id == c {
                stack.extend(def.super_classes.iter().cloned());
            }
        }
    }
    false
}

/// Orders two literals of the same range using plain std parsing.
fn naive_cmp(range: Datatype, a: &Literal, b: &Literal) -> std::cmp::Ordering {
    match range {
        Datatype::Integer | Datatype::Decimal => {
            let x: f64 = a.lexical().parse().unwrap();
            let y: f64 = b.lexical().parse().unwrap();
            x.partial_cmp(&y).unwrap()
        }
        // ISO dates with four-digit years order like strings
        Datatype::Date | Datatype::String => a.lexical().cmp(b.lexical()),
        Datatype::Boolean => {
            let t = |l: &Literal| matches!(l.lexical(), "true" | "1");
            t(a).cmp(&t(b))
        }
    }
}

fn naive_op(op: CompareOp, ord: std::cmp::Ordering) -> bool {
    use std::cmp::Ordering::*;
    match op {
        CompareOp::Eq => ord == Equal,
        CompareOp::Ne => ord != Equal,
        CompareOp::Lt => ord == Less,
        CompareOp::Le => ord == Less || ord == Equal,
        CompareOp::Gt => ord == Greater,
        CompareOp::Ge => ord == Greater || ord == Equal,
    }
}

fn find<'a>(o: &'a Ontology, id: &Iri) -> Option<&'a Individual> {
    o.individuals().iter().find(|i| i.id() == id)
}

/// Every node reachable from `from` along `path`, by enumerating chains.
fn walk(o: &Ontology, from: &Individual, path: &[Iri]) -> Vec<Iri> {
    let Some((p, rest)) = path.split_first() else {
        return vec![from.id().clone()];
    };
    let mut ends = Vec::new();
    for a in from.object_assertions() {
        if &a.property != p {
            continue;
        }
        if rest.is_empty() {
            ends.push(a.target.clone());
        } else if let Some(next) = find(o, &a.target) {
            ends.extend(walk(o, next, rest));
        }
    }
    ends
}

/// Brute-force filter semantics.
pub fn naive_eval(f: &FilterExpr, ind: &Individual, o: &Ontology) -> bool {
    match f {
        FilterExpr::True => true,
        FilterExpr::False => false,
        FilterExpr::And(c) => c.iter().all(|x| naive_eval(x, ind, o)),
        FilterExpr::Or(c) => c.iter().any(|x| naive_eval(x, ind, o)),
        FilterExpr::Not(x) => !naive_eval(x, ind, o),
        FilterExpr::Data {
            property,
            op,
            value,
        } => {
            let range = o
                .datatype_properties()
                .iter()
                .find(|p| &p.id == property)
                .unwrap()
                .range;
            let value = value.reinterpret(range).unwrap();
            ind.data_assertions()
                .iter()
                .filter(|a| &a.property == property)
                .any(|a| naive_op(*op, naive_cmp(range, &a.value, &value)))
        }
        FilterExpr::Object { property, target } => ind
            .object_assertions()
            .iter()
            .any(|a| &a.property == property && &a.target == target),
        FilterExpr::Path { path, target } => walk(o, ind, path).contains(target),
        FilterExpr::Type { class } => ind.types().iter().any(|t| is_ancestor_or_self(o, class, t)),
    }
}

/// What purification should produce: individuals with at least one declared
/// type, carrying only declared types and well-formed assertions.
pub fn naive_purify(o: &Ontology) -> Ontology {
    let classes: BTreeSet<&Iri> = o.classes().iter().map(|c| &c.id).collect();
    let dprops: BTreeSet<&Iri> = o.datatype_properties().iter().map(|p| &p.id).collect();
    let oprops: BTreeSet<&Iri> = o.object_properties().iter().map(|p| &p.id).collect();
    let survivors: BTreeSet<&Iri> = o
        .individuals()
        .iter()
        .filter(|i| i.types().iter().any(|t| classes.contains(t)))
        .map(|i| i.id())
        .collect();
    let mut out = o.copy_structure();
    for ind in o.individuals() {
        if !survivors.contains(ind.id()) {
            continue;
        }
        let mut rebuilt = Individual::untyped(ind.id().clone());
        for t in ind.types().iter().filter(|t| classes.contains(t)) {
            rebuilt.add_type(t.clone());
        }
        for a in ind.data_assertions() {
            if dprops.contains(&a.property) {
                rebuilt.add_data(a.property.clone(), a.value.clone());
            }
        }
        for a in ind.object_assertions() {
            if oprops.contains(&a.property) && survivors.contains(&a.target) {
                rebuilt.add_object(a.property.clone(), a.target.clone());
            }
        }
        out.add_individual(rebuilt);
    }
    out
}

/// `(source, property, target)` of every object assertion in `o` that
/// points at no individual of `o`.
pub fn dangling(o: &Ontology) -> Vec<(Iri, Iri, Iri)> {
    let ids: BTreeSet<&Iri> = o.individuals().iter().map(|i| i.id()).collect();
    let mut out = Vec::new();
    for ind in o.individuals() {
        for a in ind.object_assertions() {
            if !ids.contains(&a.target) {
                out.push((ind.id().clone(), a.property.clone(), a.target.clone()));
            }
        }
    }
    out
}

pub fn ids(o: &Ontology) -> BTreeSet<Iri> {
    o.individuals().iter().map(|i| i.id().clone()).collect()
}

pub fn c(local: &str) -> Iri {
    citizen(local)
}

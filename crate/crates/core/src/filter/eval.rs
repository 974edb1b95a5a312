use std::collections::BTreeSet;

use super::{CompareOp, EvalError, EvalErrorKind, FilterExpr};
use crate::model::{Datatype, Individual, Iri, Literal, Ontology, PropertyKind};

/// A filter checked against an ontology, ready to run on many individuals.
///
/// Paths are followed through the individuals of the ontology given to
/// [`Evaluator::new`].
#[derive(Debug, Clone)]
pub struct Evaluator<'o> {
    root: Node,
    onto: &'o Ontology,
}

#[derive(Debug, Clone)]
enum Node {
    Const(bool),
    And(Vec<Node>),
    Or(Vec<Node>),
    Not(Box<Node>),
    Data {
        property: Iri,
        op: CompareOp,
        value: Literal,
    },
    Object {
        property: Iri,
        target: Iri,
    },
    Path {
        path: Vec<Iri>,
        target: Iri,
    },
    /// The class and all its declared subclasses.
    Type(BTreeSet<Iri>),
}

fn err(kind: EvalErrorKind, detail: impl Into<String>) -> EvalError {
    EvalError::new(kind, detail)
}

fn object_property(o: &Ontology, p: &Iri) -> Result<(), EvalError> {
    match o.property_kind(p) {
        Some(PropertyKind::Object) => Ok(()),
        Some(PropertyKind::Datatype) => Err(err(
            EvalErrorKind::TypeMismatch,
            format!("{p} is a datatype property, compared with an individual"),
        )),
        None => Err(err(EvalErrorKind::UnknownProperty, p.to_string())),
    }
}

/// Re-reads the literal under the property range. An integer literal against
/// a decimal range, or anything against a string range, is accepted as is.
fn coerce(value: &Literal, range: Datatype, p: &Iri) -> Result<Literal, EvalError> {
    if value.datatype() == range {
        return Ok(value.clone());
    }
    value.reinterpret(range).map_err(|_| {
        err(
            EvalErrorKind::TypeMismatch,
            format!(
                "{p} has range {range}, compared with {} `{}`",
                value.datatype(),
                value.lexical()
            ),
        )
    })
}

fn compile(f: &FilterExpr, o: &Ontology) -> Result<Node, EvalError> {
    Ok(match f {
        FilterExpr::True => Node::Const(true),
        FilterExpr::False => Node::Const(false),
        FilterExpr::And(c) | FilterExpr::Or(c) => {
            if c.len() < 2 {
                return Err(err(
                    EvalErrorKind::Malformed,
                    "and/or needs at least two operands",
                ));
            }
            let nodes = c.iter().map(|x| compile(x, o)).collect::<Result<_, _>>()?;
            if matches!(f, FilterExpr::And(_)) {
                Node::And(nodes)
            } else {
                Node::Or(nodes)
            }
        }
        FilterExpr::Not(x) => Node::Not(Box::new(compile(x, o)?)),
        FilterExpr::Data {
            property,
            op,
            value,
        } => {
            let def = match o.datatype_property(property) {
                Some(def) => def,
                None if o.object_property(property).is_some() => {
                    return Err(err(
                        EvalErrorKind::TypeMismatch,
                        format!("{property} is an object property, compared with a literal"),
                    ))
                }
                None => return Err(err(EvalErrorKind::UnknownProperty, property.to_string())),
            };
            if op.is_ordering() && !def.range.is_ordered() {
                return Err(err(
                    EvalErrorKind::NonComparable,
                    format!("`{}` on {property} of range {}", op.symbol(), def.range),
                ));
            }
            Node::Data {
                property: property.clone(),
                op: *op,
                value: coerce(value, def.range, property)?,
            }
        }
        FilterExpr::Object { property, target } => {
            object_property(o, property)?;
            Node::Object {
                property: property.clone(),
                target: target.clone(),
            }
        }
        FilterExpr::Path { path, target } => {
            if path.len() < 2 {
                return Err(err(
                    EvalErrorKind::Malformed,
                    "a property path needs at least two steps",
                ));
            }
            for p in path {
                object_property(o, p)?;
            }
            Node::Path {
                path: path.clone(),
                target: target.clone(),
            }
        }
        FilterExpr::Type { class } => {
            if o.class(class).is_none() {
                return Err(err(EvalErrorKind::UnknownClass, class.to_string()));
            }
            let below = o
                .classes()
                .iter()
                .filter(|c| o.ancestors_or_self(&c.id).contains(class))
                .map(|c| c.id.clone())
                .collect();
            Node::Type(below)
        }
    })
}

impl<'o> Evaluator<'o> {
    /// Checks every name in `f` against `onto` and types its literals.
    pub fn new(f: &FilterExpr, onto: &'o Ontology) -> Result<Self, EvalError> {
        Ok(Evaluator {
            root: compile(f, onto)?,
            onto,
        })
    }

    pub fn eval(&self, ind: &Individual) -> bool {
        self.node(&self.root, ind)
    }

    fn node(&self, n: &Node, ind: &Individual) -> bool {
        match n {
            Node::Const(b) => *b,
            Node::And(c) => c.iter().all(|x| self.node(x, ind)),
            Node::Or(c) => c.iter().any(|x| self.node(x, ind)),
            Node::Not(x) => !self.node(x, ind),
            Node::Data {
                property,
                op,
                value,
            } => ind
                .data_assertions()
                .iter()
                .filter(|a| &a.property == property)
                .any(|a| a.value.compare(value).is_some_and(|ord| op.holds(ord))),
            Node::Object { property, target } => ind
                .object_assertions()
                .iter()
                .any(|a| &a.property == property && &a.target == target),
            Node::Path { path, target } => self.path(ind, path, target),
            Node::Type(below) => ind.types().iter().any(|t| below.contains(t)),
        }
    }

    fn path(&self, ind: &Individual, path: &[Iri], target: &Iri) -> bool {
        let (last, steps) = path.split_last().expect("path has at least two steps");
        let mut frontier: BTreeSet<&Iri> = BTreeSet::new();
        frontier.insert(ind.id());
        let mut start = Some(ind);
        for p in steps {
            let mut next = BTreeSet::new();
            for id in &frontier {
                let node = match start.filter(|s| s.id() == *id) {
                    Some(s) => Some(s),
                    None => self.onto.individual(id),
                };
                if let Some(node) = node {
                    next.extend(
                        node.object_assertions()
                            .iter()
                            .filter(|a| &a.property == p)
                            .map(|a| &a.target),
                    );
                }
            }
            start = None;
            frontier = next;
            if frontier.is_empty() {
                return false;
            }
        }
        frontier.iter().any(|id| {
            self.onto.individual(id).is_some_and(|x| {
                x.object_assertions()
                    .iter()
                    .any(|a| &a.property == last && &a.target == target)
            })
        })
    }
}

/// Evaluates `f` on one individual. Prefer [`Evaluator`] for many.
pub fn evaluate(f: &FilterExpr, ind: &Individual, o: &Ontology) -> Result<bool, EvalError> {
    Ok(Evaluator::new(f, o)?.eval(ind))
}

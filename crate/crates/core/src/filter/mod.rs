//! Boolean conditions over individuals, used for horizontal segmentation.
//!
//! Grammar (keywords are case-insensitive):
//!
//! ```text
//! expr    := and ( "or" and )*
//! and     := unary ( "and" unary )*
//! unary   := "not" unary | primary
//! primary := "(" expr ")" | "true" | "false"
//!          | "type" "=" name
//!          | name cmp literal
//!          | name "=" name
//!          | name ( "/" name )+ "=" name
//! cmp     := "=" | "!=" | "<" | "<=" | ">" | ">="
//! name    := prefix ":" local | ":" local | local | "<" absolute-iri ">"
//! literal := "'" ( char | "\'" | "\\" )* "'"
//! ```
//!
//! A bare `local` resolves against the default namespace, like `:local`.

use std::fmt;

use thiserror::Error;

use crate::model::{Iri, Literal};

mod eval;
mod parse;

pub use eval::{evaluate, Evaluator};
pub use parse::{parse_filter, FilterParseError, FilterParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl CompareOp {
    pub fn is_ordering(self) -> bool {
        matches!(
            self,
            CompareOp::Lt | CompareOp::Le | CompareOp::Gt | CompareOp::Ge
        )
    }

    pub fn holds(self, ord: std::cmp::Ordering) -> bool {
        use std::cmp::Ordering::*;
        match self {
            CompareOp::Eq => ord == Equal,
            CompareOp::Ne => ord != Equal,
            CompareOp::Lt => ord == Less,
            CompareOp::Le => ord != Greater,
            CompareOp::Gt => ord == Greater,
            CompareOp::Ge => ord != Less,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CompareOp::Eq => "=",
            CompareOp::Ne => "!=",
            CompareOp::Lt => "<",
            CompareOp::Le => "<=",
            CompareOp::Gt => ">",
            CompareOp::Ge => ">=",
        }
    }
}

/// A parsed condition. `And`/`Or` need at least two children and a `Path`
/// at least two properties; [`Evaluator::new`] rejects anything else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FilterExpr {
    True,
    False,
    And(Vec<FilterExpr>),
    Or(Vec<FilterExpr>),
    Not(Box<FilterExpr>),
    /// Some assertion of `property` compares to `value` under `op`.
    Data {
        property: Iri,
        op: CompareOp,
        value: Literal,
    },
    /// Some assertion of `property` points at `target`.
    Object {
        property: Iri,
        target: Iri,
    },
    /// A chain of object assertions along `path` ends at `target`.
    Path {
        path: Vec<Iri>,
        target: Iri,
    },
    /// The individual is typed by `class` or one of its subclasses.
    Type {
        class: Iri,
    },
}

impl FilterExpr {
    pub fn negate(inner: FilterExpr) -> Self {
        FilterExpr::Not(Box::new(inner))
    }

    /// Binary `and`, flattening nested conjunctions.
    pub fn and(a: FilterExpr, b: FilterExpr) -> Self {
        let mut children = Vec::new();
        for x in [a, b] {
            match x {
                FilterExpr::And(inner) => children.extend(inner),
                other => children.push(other),
            }
        }
        FilterExpr::And(children)
    }

    /// Binary `or`, flattening nested disjunctions.
    pub fn or(a: FilterExpr, b: FilterExpr) -> Self {
        let mut children = Vec::new();
        for x in [a, b] {
            match x {
                FilterExpr::Or(inner) => children.extend(inner),
                other => children.push(other),
            }
        }
        FilterExpr::Or(children)
    }

    /// Every property IRI mentioned anywhere in the expression.
    pub fn properties(&self) -> Vec<&Iri> {
        let mut out = Vec::new();
        self.visit(&mut |e| match e {
            FilterExpr::Data { property, .. } | FilterExpr::Object { property, .. } => {
                out.push(property)
            }
            FilterExpr::Path { path, .. } => out.extend(path.iter()),
            _ => {}
        });
        out
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a FilterExpr)) {
        f(self);
        match self {
            FilterExpr::And(c) | FilterExpr::Or(c) => c.iter().for_each(|x| x.visit(f)),
            FilterExpr::Not(x) => x.visit(f),
            _ => {}
        }
    }
}

/// Canonical text form with absolute IRIs. Reparsing gives the same tree,
/// except that a string literal shaped like a number or date is re-inferred
/// with that type (evaluation re-reads it under the property range anyway).
impl fmt::Display for FilterExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, children: &[FilterExpr], sep: &str) -> fmt::Result {
            f.write_str("(")?;
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    write!(f, " {sep} ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")
        }
        match self {
            FilterExpr::True => f.write_str("true"),
            FilterExpr::False => f.write_str("false"),
            FilterExpr::And(c) => join(f, c, "and"),
            FilterExpr::Or(c) => join(f, c, "or"),
            FilterExpr::Not(x) => write!(f, "not {x}"),
            FilterExpr::Data {
                property,
                op,
                value,
            } => {
                let escaped = value.lexical().replace('\\', "\\\\").replace('\'', "\\'");
                write!(f, "<{property}> {} '{escaped}'", op.symbol())
            }
            FilterExpr::Object { property, target } => write!(f, "<{property}> = <{target}>"),
            FilterExpr::Path { path, target } => {
                for (i, p) in path.iter().enumerate() {
                    if i > 0 {
                        f.write_str("/")?;
                    }
                    write!(f, "<{p}>")?;
                }
                write!(f, " = <{target}>")
            }
            FilterExpr::Type { class } => write!(f, "type = <{class}>"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalErrorKind {
    UnknownProperty,
    UnknownClass,
    TypeMismatch,
    NonComparable,
    /// `And`/`Or` with fewer than two children, or a path shorter than two.
    Malformed,
}

impl EvalErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalErrorKind::UnknownProperty => "unknown-property",
            EvalErrorKind::UnknownClass => "unknown-class",
            EvalErrorKind::TypeMismatch => "type-mismatch",
            EvalErrorKind::NonComparable => "non-comparable",
            EvalErrorKind::Malformed => "malformed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {detail}", kind.as_str())]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub detail: String,
}

impl EvalError {
    pub(crate) fn new(kind: EvalErrorKind, detail: impl Into<String>) -> Self {
        EvalError {
            kind,
            detail: detail.into(),
        }
    }
}

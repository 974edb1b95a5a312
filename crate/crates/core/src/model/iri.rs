use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";
pub const XML_NS: &str = "http://www.w3.org/XML/1998/namespace";
/// Vocabulary used for the bridge-stub marker on `owl:Class`.
pub const OSEG_NS: &str = "urn:owlseg:vocab#";

/// Prefixes that are always in scope and cannot be rebound.
pub const STANDARD_PREFIXES: [(&str, &str); 5] = [
    ("rdf", RDF_NS),
    ("rdfs", RDFS_NS),
    ("owl", OWL_NS),
    ("xsd", XSD_NS),
    ("oseg", OSEG_NS),
];

const RESERVED_PREFIXES: [&str; 7] = ["rdf", "rdfs", "owl", "xsd", "oseg", "xml", "xmlns"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IriError {
    #[error("empty IRI")]
    Empty,
    #[error("IRI `{0}` is not absolute (no scheme)")]
    Relative(String),
    #[error("IRI `{0}` contains a forbidden character")]
    ForbiddenChar(String),
    #[error("cannot resolve relative reference `{0}` without a base IRI")]
    NoBase(String),
}

/// An absolute IRI. Equality is exact string equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, IriError> {
        let value = value.into();
        if value.is_empty() {
            return Err(IriError::Empty);
        }
        if value
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || "<>\"{}|\\^`".contains(c))
        {
            return Err(IriError::ForbiddenChar(value));
        }
        if !has_scheme(&value) {
            return Err(IriError::Relative(value));
        }
        Ok(Iri(value))
    }

    /// Resolves `reference` (absolute, `#fragment`, or relative path) against `base`.
    pub fn resolve(base: Option<&Iri>, reference: &str) -> Result<Self, IriError> {
        if has_scheme(reference) {
            return Iri::new(reference);
        }
        let base = base.ok_or_else(|| IriError::NoBase(reference.to_owned()))?;
        let stem = base.without_fragment();
        if reference.is_empty() {
            return Iri::new(stem);
        }
        if reference.starts_with('#') {
            return Iri::new(format!("{stem}{reference}"));
        }
        let dir = match stem.rfind('/') {
            Some(i) if i > scheme_end(stem) + 2 => &stem[..=i],
            _ => return Iri::new(format!("{stem}/{reference}")),
        };
        Iri::new(format!("{dir}{reference}"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn without_fragment(&self) -> &str {
        match self.0.find('#') {
            Some(i) => &self.0[..i],
            None => &self.0,
        }
    }

    /// Splits into `(namespace, local)` where `local` is the longest suffix that
    /// is an XML NCName. `None` if no such non-empty suffix exists.
    pub fn split(&self) -> Option<(&str, &str)> {
        let s = self.0.as_str();
        let mut start = None;
        for (i, c) in s.char_indices().rev() {
            if is_name_char(c) {
                if is_name_start_char(c) {
                    start = Some(i);
                }
            } else {
                break;
            }
        }
        let start = start?;
        if start == 0 {
            return None;
        }
        Some((&s[..start], &s[start..]))
    }

    /// Fragment or last path segment; used for display and bare-name matching.
    pub fn local_name(&self) -> &str {
        self.split().map(|(_, l)| l).unwrap_or(&self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

fn scheme_end(s: &str) -> usize {
    s.find(':').unwrap_or(0)
}

fn has_scheme(s: &str) -> bool {
    let Some(colon) = s.find(':') else {
        return false;
    };
    let scheme = &s[..colon];
    let mut chars = scheme.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
}

pub(crate) fn is_name_start_char(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

pub(crate) fn is_ncname(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if is_name_start_char(c)) && chars.all(is_name_char)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamespaceError {
    #[error("prefix `{0}` is reserved")]
    Reserved(String),
    #[error("`{0}` is not a valid prefix")]
    InvalidPrefix(String),
}

/// User-declared prefix bindings plus an optional document base.
///
/// The standard vocabularies in [`STANDARD_PREFIXES`] are implicit and never
/// stored here. The empty prefix is the default namespace.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NamespaceMap {
    bindings: BTreeMap<String, Iri>,
    base: Option<Iri>,
}

impl NamespaceMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_base(base: Iri) -> Self {
        Self {
            bindings: BTreeMap::new(),
            base: Some(base),
        }
    }

    pub fn bind(&mut self, prefix: &str, iri: Iri) -> Result<(), NamespaceError> {
        if RESERVED_PREFIXES.contains(&prefix) {
            return Err(NamespaceError::Reserved(prefix.to_owned()));
        }
        if !prefix.is_empty() && (!is_ncname(prefix) || prefix.contains('.')) {
            return Err(NamespaceError::InvalidPrefix(prefix.to_owned()));
        }
        self.bindings.insert(prefix.to_owned(), iri);
        Ok(())
    }

    pub fn set_base(&mut self, base: Option<Iri>) {
        self.base = base;
    }

    pub fn base(&self) -> Option<&Iri> {
        self.base.as_ref()
    }

    pub fn get(&self, prefix: &str) -> Option<&Iri> {
        self.bindings.get(prefix)
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.bindings.iter().map(|(p, i)| (p.as_str(), i))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// The default namespace: the empty-prefix binding, else `base#`.
    pub fn default_namespace(&self) -> Option<String> {
        if let Some(ns) = self.bindings.get("") {
            return Some(ns.as_str().to_owned());
        }
        self.base
            .as_ref()
            .map(|b| format!("{}#", b.without_fragment()))
    }

    /// Expands `prefix:local`; the empty prefix means the default namespace.
    /// Standard prefixes (`rdf`, `owl`, ...) are always available.
    pub fn expand(&self, prefix: &str, local: &str) -> Option<Iri> {
        let ns = if prefix.is_empty() {
            self.default_namespace()?
        } else if let Some(iri) = self.bindings.get(prefix) {
            iri.as_str().to_owned()
        } else {
            STANDARD_PREFIXES
                .iter()
                .find(|(p, _)| *p == prefix)
                .map(|(_, ns)| (*ns).to_owned())?
        };
        Iri::new(format!("{ns}{local}")).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_relative_and_empty() {
        assert_eq!(Iri::new(""), Err(IriError::Empty));
        assert!(matches!(Iri::new("Person"), Err(IriError::Relative(_))));
        assert!(matches!(Iri::new("#Person"), Err(IriError::Relative(_))));
        assert!(matches!(
            Iri::new("http://a b"),
            Err(IriError::ForbiddenChar(_))
        ));
        assert!(Iri::new("urn:x:y").is_ok());
    }

    #[test]
    fn resolves_fragments_and_paths() {
        let base = Iri::new("http://example.org/onto/citizen").unwrap();
        let r = |s| Iri::resolve(Some(&base), s).unwrap().as_str().to_owned();
        assert_eq!(r("#Person"), "http://example.org/onto/citizen#Person");
        assert_eq!(r("other"), "http://example.org/onto/other");
        assert_eq!(r(""), "http://example.org/onto/citizen");
        assert_eq!(r("urn:a"), "urn:a");
        let frag = Iri::new("http://example.org/c#x").unwrap();
        assert_eq!(
            Iri::resolve(Some(&frag), "#y").unwrap().as_str(),
            "http://example.org/c#y"
        );
        let host = Iri::new("http://example.org").unwrap();
        assert_eq!(
            Iri::resolve(Some(&host), "a").unwrap().as_str(),
            "http://example.org/a"
        );
        assert_eq!(Iri::resolve(None, "#x"), Err(IriError::NoBase("#x".into())));
    }

    #[test]
    fn splits_at_ncname_suffix() {
        let i = Iri::new("http://example.org/citizen#hasAsFather").unwrap();
        assert_eq!(
            i.split(),
            Some(("http://example.org/citizen#", "hasAsFather"))
        );
        let i = Iri::new("http://example.org/p/person0001").unwrap();
        assert_eq!(i.split(), Some(("http://example.org/p/", "person0001")));
        let i = Iri::new("http://example.org/123").unwrap();
        assert_eq!(i.split(), None);
        assert_eq!(Iri::new("http://x/a/").unwrap().split(), None);
    }

    #[test]
    fn namespace_map_reserves_standard_prefixes() {
        let mut ns = NamespaceMap::new();
        assert!(ns.bind("owl", Iri::new("http://x/").unwrap()).is_err());
        assert!(ns.bind("1x", Iri::new("http://x/").unwrap()).is_err());
        ns.bind("", Iri::new("http://x/c#").unwrap()).unwrap();
        ns.bind("ex", Iri::new("http://x/e/").unwrap()).unwrap();
        assert_eq!(ns.expand("", "A").unwrap().as_str(), "http://x/c#A");
        assert_eq!(ns.expand("ex", "B").unwrap().as_str(), "http://x/e/B");
        assert_eq!(
            ns.expand("owl", "Class").unwrap().as_str(),
            format!("{OWL_NS}Class")
        );
        assert!(ns.expand("nope", "B").is_none());
    }

    #[test]
    fn default_namespace_falls_back_to_base() {
        let ns = NamespaceMap::with_base(Iri::new("http://x/c").unwrap());
        assert_eq!(ns.default_namespace().as_deref(), Some("http://x/c#"));
        assert_eq!(NamespaceMap::new().default_namespace(), None);
    }
}

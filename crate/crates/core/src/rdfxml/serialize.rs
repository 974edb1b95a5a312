use std::fmt::Write as _;
use std::ops::Range;

use crate::model::{Individual, Iri, Ontology, OSEG_NS, STANDARD_PREFIXES};

/// Byte ranges of each section in a serialized document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layout {
    pub header: Range<usize>,
    pub classes: Range<usize>,
    pub object_properties: Range<usize>,
    pub datatype_properties: Range<usize>,
    pub individuals: Range<usize>,
}

/// Serializes `o` deterministically: header, classes, object properties,
/// datatype properties, individuals, each in IRI order. Resources are always
/// written with absolute `rdf:about` / `rdf:resource` values.
pub fn serialize(o: &Ontology) -> Vec<u8> {
    serialize_with_layout(o).0
}

pub fn serialize_with_layout(o: &Ontology) -> (Vec<u8>, Layout) {
    let mut w = Writer {
        out: String::new(),
        o,
    };
    let mut layout = Layout::default();

    w.out
        .push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF");
    let needs_oseg = o.classes().iter().any(|c| c.external);
    for (prefix, ns) in STANDARD_PREFIXES {
        if ns != OSEG_NS || needs_oseg {
            write!(w.out, "\n    xmlns:{prefix}=\"{}\"", escape_attr(ns)).unwrap();
        }
    }
    for (prefix, ns) in o.namespaces().bindings() {
        if prefix.is_empty() {
            write!(w.out, "\n    xmlns=\"{}\"", escape_attr(ns.as_str())).unwrap();
        } else {
            write!(
                w.out,
                "\n    xmlns:{prefix}=\"{}\"",
                escape_attr(ns.as_str())
            )
            .unwrap();
        }
    }
    if let Some(base) = o.namespaces().base() {
        write!(w.out, "\n    xml:base=\"{}\"", escape_attr(base.as_str())).unwrap();
    }
    w.out.push_str(">\n");

    let start = w.out.len();
    if let Some(h) = o.header() {
        write!(
            w.out,
            "  <owl:Ontology rdf:about=\"{}\"",
            escape_attr(h.iri.as_str())
        )
        .unwrap();
        if h.comments.is_empty() {
            w.out.push_str("/>\n");
        } else {
            w.out.push_str(">\n");
            for c in &h.comments {
                writeln!(w.out, "    <rdfs:comment>{}</rdfs:comment>", escape_text(c)).unwrap();
            }
            w.out.push_str("  </owl:Ontology>\n");
        }
    }
    layout.header = start..w.out.len();

    let start = w.out.len();
    for c in o.classes() {
        write!(
            w.out,
            "  <owl:Class rdf:about=\"{}\"",
            escape_attr(c.id.as_str())
        )
        .unwrap();
        if c.external {
            w.out.push_str(" oseg:external=\"true\"");
        }
        if c.super_classes.is_empty() {
            w.out.push_str("/>\n");
        } else {
            w.out.push_str(">\n");
            for s in &c.super_classes {
                writeln!(
                    w.out,
                    "    <rdfs:subClassOf rdf:resource=\"{}\"/>",
                    escape_attr(s.as_str())
                )
                .unwrap();
            }
            w.out.push_str("  </owl:Class>\n");
        }
    }
    layout.classes = start..w.out.len();

    let start = w.out.len();
    for p in o.object_properties() {
        write!(
            w.out,
            "  <owl:ObjectProperty rdf:about=\"{}\">\n    <rdfs:domain rdf:resource=\"{}\"/>\n    <rdfs:range rdf:resource=\"{}\"/>\n  </owl:ObjectProperty>\n",
            escape_attr(p.id.as_str()),
            escape_attr(p.domain.as_str()),
            escape_attr(p.range.as_str()),
        )
        .unwrap();
    }
    layout.object_properties = start..w.out.len();

    let start = w.out.len();
    for p in o.datatype_properties() {
        write!(
            w.out,
            "  <owl:DatatypeProperty rdf:about=\"{}\">\n    <rdfs:domain rdf:resource=\"{}\"/>\n    <rdfs:range rdf:resource=\"{}\"/>\n  </owl:DatatypeProperty>\n",
            escape_attr(p.id.as_str()),
            escape_attr(p.domain.as_str()),
            escape_attr(&p.range.xsd_iri()),
        )
        .unwrap();
    }
    layout.datatype_properties = start..w.out.len();

    let start = w.out.len();
    for ind in o.individuals() {
        w.individual(ind);
    }
    layout.individuals = start..w.out.len();

    w.out.push_str("</rdf:RDF>\n");
    (w.out.into_bytes(), layout)
}

struct Writer<'a> {
    out: String,
    o: &'a Ontology,
}

/// An element name plus the local `xmlns` declaration it needs, if any.
struct ElementName {
    qname: String,
    decl: Option<String>,
}

impl Writer<'_> {
    /// Picks a prefix for `iri`'s namespace. Root-level bindings are reused;
    /// otherwise a prefix is declared on the element itself so the document's
    /// namespace map stays untouched. `avoid` is a prefix already declared by
    /// an enclosing element.
    fn element_name(&self, iri: &Iri, avoid: Option<&str>) -> ElementName {
        let (ns, local) = iri
            .split()
            .expect("validated ontologies only contain XML-name IRIs");
        let ns_map = self.o.namespaces();
        if ns_map.get("").is_some_and(|d| d.as_str() == ns) {
            return ElementName {
                qname: local.to_owned(),
                decl: None,
            };
        }
        if let Some((p, _)) = ns_map
            .bindings()
            .find(|(p, i)| !p.is_empty() && i.as_str() == ns)
        {
            return ElementName {
                qname: format!("{p}:{local}"),
                decl: None,
            };
        }
        if let Some((p, _)) = STANDARD_PREFIXES.iter().find(|(_, i)| *i == ns) {
            if *p != "oseg" || self.o.classes().iter().any(|c| c.external) {
                return ElementName {
                    qname: format!("{p}:{local}"),
                    decl: None,
                };
            }
        }
        let prefix = (0..)
            .map(|i| format!("ns{i}"))
            .find(|p| ns_map.get(p).is_none() && Some(p.as_str()) != avoid)
            .expect("unbounded");
        ElementName {
            qname: format!("{prefix}:{local}"),
            decl: Some(format!(" xmlns:{prefix}=\"{}\"", escape_attr(ns))),
        }
    }

    fn individual(&mut self, ind: &Individual) {
        let (first, rest) = ind
            .types()
            .split_first()
            .expect("validated individuals have a type");
        let name = self.element_name(first, None);
        let outer_prefix = name
            .decl
            .as_ref()
            .and_then(|_| name.qname.split_once(':').map(|(p, _)| p.to_owned()));
        write!(
            self.out,
            "  <{}{} rdf:about=\"{}\"",
            name.qname,
            name.decl.as_deref().unwrap_or(""),
            escape_attr(ind.id().as_str())
        )
        .unwrap();
        if rest.is_empty() && ind.assertion_count() == 0 {
            self.out.push_str("/>\n");
            return;
        }
        self.out.push_str(">\n");
        for t in rest {
            writeln!(
                self.out,
                "    <rdf:type rdf:resource=\"{}\"/>",
                escape_attr(t.as_str())
            )
            .unwrap();
        }
        let same_ns = |iri: &Iri| first.split().map(|s| s.0) == iri.split().map(|s| s.0);
        for a in ind.data_assertions() {
            let p = self.property_name(
                &a.property,
                &name,
                outer_prefix.as_deref(),
                same_ns(&a.property),
            );
            writeln!(
                self.out,
                "    <{} rdf:datatype=\"{}\">{}</{}>",
                p.0,
                escape_attr(&a.value.datatype().xsd_iri()),
                escape_text(a.value.lexical()),
                p.1
            )
            .unwrap();
        }
        for a in ind.object_assertions() {
            let p = self.property_name(
                &a.property,
                &name,
                outer_prefix.as_deref(),
                same_ns(&a.property),
            );
            writeln!(
                self.out,
                "    <{} rdf:resource=\"{}\"/>",
                p.0,
                escape_attr(a.target.as_str())
            )
            .unwrap();
        }
        writeln!(self.out, "  </{}>", name.qname).unwrap();
    }

    /// `(start tag name incl. any declaration, end tag name)`.
    fn property_name(
        &self,
        property: &Iri,
        outer: &ElementName,
        outer_prefix: Option<&str>,
        same_ns_as_outer: bool,
    ) -> (String, String) {
        if same_ns_as_outer && outer.decl.is_some() {
            let prefix = outer_prefix.expect("declared prefix");
            let local = property.split().expect("validated").1;
            let q = format!("{prefix}:{local}");
            return (q.clone(), q);
        }
        let n = self.element_name(property, outer_prefix);
        (
            format!("{}{}", n.qname, n.decl.as_deref().unwrap_or("")),
            n.qname,
        )
    }
}

fn escape_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\t' => out.push_str("&#9;"),
            '\n' => out.push_str("&#10;"),
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
    out
}

fn escape_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '\r' => out.push_str("&#13;"),
            c => out.push(c),
        }
    }
    out
}

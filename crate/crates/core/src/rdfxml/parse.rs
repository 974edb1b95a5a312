use std::collections::BTreeMap;

use super::tree::{read_document, Element, LineIndex};
use super::{ParseError, ParseErrorKind, ParseMode, ParseOptions, ParseWarning, Position};
use crate::model::{
    is_ncname, ClassDef, Datatype, DatatypePropertyDef, Header, Individual, Iri, Literal,
    NamespaceMap, ObjectPropertyDef, Ontology, PropertyKind, OSEG_NS, OWL_NS, RDFS_NS, RDF_NS,
    STANDARD_PREFIXES, XML_NS, XSD_NS,
};

/// Parses a UTF-8 RDF/XML document.
pub fn parse(
    input: &[u8],
    opts: ParseOptions,
) -> Result<(Ontology, Vec<ParseWarning>), ParseError> {
    match std::str::from_utf8(input) {
        Ok(text) => parse_str(text, opts),
        Err(e) => {
            let valid = std::str::from_utf8(&input[..e.valid_up_to()]).unwrap_or_default();
            Err(ParseError {
                kind: ParseErrorKind::Encoding,
                position: LineIndex::new(valid).position(valid.len()),
                message: "input is not valid UTF-8".into(),
            })
        }
    }
}

pub fn parse_str(
    text: &str,
    opts: ParseOptions,
) -> Result<(Ontology, Vec<ParseWarning>), ParseError> {
    let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
    let doc = read_document(text)?;
    let mut interp = Interp {
        strict: opts.mode == ParseMode::Strict,
        warnings: Vec::new(),
        base: None,
    };
    for pos in doc.doctypes {
        interp.reject(
            ParseErrorKind::Unsupported,
            pos,
            "DOCTYPE declaration".into(),
        )?;
    }
    let onto = interp.document(&doc.root)?;
    Ok((onto, interp.warnings))
}

fn err(kind: ParseErrorKind, position: Position, message: impl Into<String>) -> ParseError {
    ParseError {
        kind,
        position,
        message: message.into(),
    }
}

fn is_standard_ns(ns: &str) -> bool {
    [RDF_NS, RDFS_NS, OWL_NS, XSD_NS].contains(&ns)
}

#[derive(Default)]
struct RawProperty {
    kind: Option<PropertyKind>,
    domains: Vec<String>,
    ranges: Vec<String>,
    pos: Position,
}

struct PendingLink {
    source: Iri,
    property: Iri,
    target: Iri,
    pos: Position,
}

struct Interp {
    strict: bool,
    warnings: Vec<ParseWarning>,
    base: Option<Iri>,
}

impl Interp {
    /// Strict mode: error. Lenient mode: record a warning and carry on.
    fn reject(
        &mut self,
        kind: ParseErrorKind,
        pos: Position,
        construct: String,
    ) -> Result<(), ParseError> {
        if self.strict {
            return Err(err(kind, pos, construct));
        }
        self.warnings.push(ParseWarning {
            position: pos,
            construct,
            action: "dropped",
        });
        Ok(())
    }

    fn resolve(&self, reference: &str, pos: Position) -> Result<Iri, ParseError> {
        Iri::resolve(self.base.as_ref(), reference)
            .map_err(|e| err(ParseErrorKind::InvalidIri, pos, e.to_string()))
    }

    /// `rdf:about` / `rdf:ID` of a node element, resolved.
    fn node_id(&self, el: &Element) -> Result<Option<Iri>, ParseError> {
        match (el.attr(RDF_NS, "about"), el.attr(RDF_NS, "ID")) {
            (Some(_), Some(_)) => Err(err(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("`{}` has both rdf:about and rdf:ID", el.qname),
            )),
            (Some(about), None) => self.resolve(about, el.pos).map(Some),
            (None, Some(id)) => {
                if !is_ncname(id) {
                    return Err(err(
                        ParseErrorKind::InvalidIri,
                        el.pos,
                        format!("rdf:ID `{id}` is not an XML name"),
                    ));
                }
                self.resolve(&format!("#{id}"), el.pos).map(Some)
            }
            (None, None) => Ok(None),
        }
    }

    fn resource(&self, el: &Element) -> Result<Option<Iri>, ParseError> {
        el.attr(RDF_NS, "resource")
            .map(|r| self.resolve(r, el.pos))
            .transpose()
    }

    /// Rejects attributes outside `allowed` and non-blank text content.
    fn check_shape(&mut self, el: &Element, allowed: &[(&str, &str)]) -> Result<(), ParseError> {
        for a in &el.attrs {
            if !allowed.iter().any(|(ns, l)| a.ns == *ns && a.local == *l) {
                self.reject(
                    ParseErrorKind::Unsupported,
                    el.pos,
                    format!("attribute `{}{}` on `{}`", a.ns, a.local, el.qname),
                )?;
            }
        }
        if !el.text.trim().is_empty() {
            self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("text content in `{}`", el.qname),
            )?;
        }
        Ok(())
    }

    /// A child carrying only `rdf:resource`.
    fn reference_child(&mut self, el: &Element) -> Result<Option<Iri>, ParseError> {
        if !el.children.is_empty() {
            self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("nested description inside `{}`", el.qname),
            )?;
            return Ok(None);
        }
        self.check_shape(el, &[(RDF_NS, "resource")])?;
        let r = self.resource(el)?;
        if r.is_none() {
            self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("`{}` without rdf:resource", el.qname),
            )?;
        }
        Ok(r)
    }

    fn document(&mut self, root: &Element) -> Result<Ontology, ParseError> {
        if !root.is(RDF_NS, "RDF") {
            return Err(err(
                ParseErrorKind::Unsupported,
                root.pos,
                format!("root element `{}` is not rdf:RDF", root.qname),
            ));
        }
        let mut namespaces = NamespaceMap::new();
        if let Some(base) = root.attr(XML_NS, "base") {
            let b = Iri::new(base)
                .map_err(|e| err(ParseErrorKind::InvalidIri, root.pos, e.to_string()))?;
            namespaces.set_base(Some(b.clone()));
            self.base = Some(b);
        }
        self.check_shape(root, &[(XML_NS, "base")])?;
        for (prefix, ns) in &root.xmlns {
            if prefix == "xml" || STANDARD_PREFIXES.contains(&(prefix.as_str(), ns.as_str())) {
                continue;
            }
            let iri = Iri::new(ns.clone())
                .map_err(|e| err(ParseErrorKind::InvalidIri, root.pos, e.to_string()))?;
            if let Err(e) = namespaces.bind(prefix, iri) {
                self.reject(
                    ParseErrorKind::Unsupported,
                    root.pos,
                    format!("namespace binding `{prefix}`: {e}"),
                )?;
            }
        }

        let mut onto = Ontology::new(namespaces);
        let mut classes: BTreeMap<Iri, (ClassDef, Position)> = BTreeMap::new();
        let mut properties: BTreeMap<Iri, RawProperty> = BTreeMap::new();
        let mut individual_elements = Vec::new();

        for el in &root.children {
            if el.is(OWL_NS, "Ontology") {
                self.header(el, &mut onto)?;
            } else if el.is(OWL_NS, "Class") {
                self.class(el, &mut classes)?;
            } else if el.is(OWL_NS, "ObjectProperty") {
                self.property(el, PropertyKind::Object, &mut properties)?;
            } else if el.is(OWL_NS, "DatatypeProperty") {
                self.property(el, PropertyKind::Datatype, &mut properties)?;
            } else if is_standard_ns(&el.ns) || el.ns == OSEG_NS {
                self.reject(
                    ParseErrorKind::Unsupported,
                    el.pos,
                    format!("element `{}`", el.qname),
                )?;
            } else {
                individual_elements.push(el);
            }
        }

        // superclass edges need every class declared
        let declared: Vec<Iri> = classes.keys().cloned().collect();
        for (def, pos) in classes.values_mut() {
            let mut kept = Vec::new();
            for s in std::mem::take(&mut def.super_classes) {
                if declared.binary_search(&s).is_ok() {
                    kept.push(s);
                } else {
                    self.reject(
                        ParseErrorKind::Dangling,
                        *pos,
                        format!("subClassOf undeclared class {s}"),
                    )?;
                }
            }
            def.super_classes = kept;
        }
        for (def, _) in classes.into_values() {
            onto.add_class(def);
        }

        for (id, raw) in properties {
            self.finish_property(id, raw, &mut onto)?;
        }

        let mut individuals: BTreeMap<Iri, Individual> = BTreeMap::new();
        let mut links = Vec::new();
        for el in individual_elements {
            self.individual(el, &onto, &mut individuals, &mut links)?;
        }
        for link in links {
            if !individuals.contains_key(&link.target) {
                self.reject(
                    ParseErrorKind::Dangling,
                    link.pos,
                    format!(
                        "{} {} refers to missing individual {}",
                        link.source, link.property, link.target
                    ),
                )?;
                if let Some(ind) = individuals.get_mut(&link.source) {
                    ind.retain_objects(|a| {
                        !(a.property == link.property && a.target == link.target)
                    });
                }
            }
        }
        for ind in individuals.into_values() {
            onto.add_individual(ind);
        }

        let report = onto.validate();
        if let Some(first) = report.violations.first() {
            return Err(err(ParseErrorKind::Invalid, root.pos, first.to_string()));
        }
        Ok(onto)
    }

    fn header(&mut self, el: &Element, onto: &mut Ontology) -> Result<(), ParseError> {
        if onto.header().is_some() {
            return self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                "second owl:Ontology header".into(),
            );
        }
        self.check_shape(el, &[(RDF_NS, "about")])?;
        let Some(iri) = el
            .attr(RDF_NS, "about")
            .map(|a| self.resolve(a, el.pos))
            .transpose()?
        else {
            return self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                "owl:Ontology without rdf:about".into(),
            );
        };
        let mut header = Header::new(iri);
        for c in &el.children {
            if c.is(RDFS_NS, "comment") && c.children.is_empty() {
                if c.attrs.is_empty() {
                    header.comments.push(c.text.clone());
                } else {
                    self.reject(
                        ParseErrorKind::Unsupported,
                        c.pos,
                        "annotated rdfs:comment".into(),
                    )?;
                }
            } else {
                self.reject(
                    ParseErrorKind::Unsupported,
                    c.pos,
                    format!("header element `{}`", c.qname),
                )?;
            }
        }
        onto.set_header(Some(header));
        Ok(())
    }

    fn class(
        &mut self,
        el: &Element,
        classes: &mut BTreeMap<Iri, (ClassDef, Position)>,
    ) -> Result<(), ParseError> {
        self.check_shape(
            el,
            &[(RDF_NS, "about"), (RDF_NS, "ID"), (OSEG_NS, "external")],
        )?;
        let Some(id) = self.node_id(el)? else {
            return self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                "anonymous owl:Class".into(),
            );
        };
        let external = match el.attr(OSEG_NS, "external") {
            None | Some("false") => false,
            Some("true") => true,
            Some(other) => {
                self.reject(
                    ParseErrorKind::Unsupported,
                    el.pos,
                    format!("oseg:external value `{other}`"),
                )?;
                false
            }
        };
        let mut def = ClassDef {
            id: id.clone(),
            super_classes: Vec::new(),
            external,
        };
        for c in &el.children {
            if c.is(RDFS_NS, "subClassOf") {
                if let Some(s) = self.reference_child(c)? {
                    def.super_classes.push(s);
                }
            } else {
                self.reject(
                    ParseErrorKind::Unsupported,
                    c.pos,
                    format!("class axiom `{}`", c.qname),
                )?;
            }
        }
        match classes.get_mut(&id) {
            Some((existing, _)) => {
                existing.super_classes.extend(def.super_classes);
                existing.external &= def.external;
            }
            None => {
                classes.insert(id, (def, el.pos));
            }
        }
        Ok(())
    }

    fn property(
        &mut self,
        el: &Element,
        kind: PropertyKind,
        properties: &mut BTreeMap<Iri, RawProperty>,
    ) -> Result<(), ParseError> {
        self.check_shape(el, &[(RDF_NS, "about"), (RDF_NS, "ID")])?;
        let Some(id) = self.node_id(el)? else {
            return self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("anonymous `{}`", el.qname),
            );
        };
        let raw = properties.entry(id.clone()).or_insert_with(|| RawProperty {
            pos: el.pos,
            ..Default::default()
        });
        match raw.kind {
            None => raw.kind = Some(kind),
            Some(k) if k != kind => {
                return self.reject(
                    ParseErrorKind::Unsupported,
                    el.pos,
                    format!("{id} declared as both object and datatype property"),
                );
            }
            Some(_) => {}
        }
        let mut domains = Vec::new();
        let mut ranges = Vec::new();
        for c in &el.children {
            let slot = if c.is(RDFS_NS, "domain") {
                &mut domains
            } else if c.is(RDFS_NS, "range") {
                &mut ranges
            } else {
                self.reject(
                    ParseErrorKind::Unsupported,
                    c.pos,
                    format!("property axiom `{}`", c.qname),
                )?;
                continue;
            };
            if let Some(r) = self.reference_child(c)? {
                slot.push(r.as_str().to_owned());
            }
        }
        let raw = properties.get_mut(&id).expect("inserted above");
        for d in domains {
            if !raw.domains.contains(&d) {
                raw.domains.push(d);
            }
        }
        for r in ranges {
            if !raw.ranges.contains(&r) {
                raw.ranges.push(r);
            }
        }
        Ok(())
    }

    fn single(
        &mut self,
        id: &Iri,
        what: &str,
        values: &[String],
        pos: Position,
    ) -> Result<Option<String>, ParseError> {
        match values {
            [] => {
                self.reject(
                    ParseErrorKind::Unsupported,
                    pos,
                    format!("property {id} without {what}"),
                )?;
                Ok(None)
            }
            [one] => Ok(Some(one.clone())),
            [first, ..] => {
                self.reject(
                    ParseErrorKind::Unsupported,
                    pos,
                    format!("property {id} with multiple {what}s"),
                )?;
                Ok(Some(first.clone()))
            }
        }
    }

    fn finish_property(
        &mut self,
        id: Iri,
        raw: RawProperty,
        onto: &mut Ontology,
    ) -> Result<(), ParseError> {
        let pos = raw.pos;
        let Some(domain) = self.single(&id, "domain", &raw.domains, pos)? else {
            return Ok(());
        };
        let Some(range) = self.single(&id, "range", &raw.ranges, pos)? else {
            return Ok(());
        };
        let domain = Iri::new(domain).expect("resolved IRI");
        if onto.class(&domain).is_none() {
            return self.reject(
                ParseErrorKind::Dangling,
                pos,
                format!("property {id} has undeclared domain {domain}"),
            );
        }
        match raw.kind.unwrap_or(PropertyKind::Object) {
            PropertyKind::Object => {
                let range = Iri::new(range).expect("resolved IRI");
                if onto.class(&range).is_none() {
                    return self.reject(
                        ParseErrorKind::Dangling,
                        pos,
                        format!("property {id} has undeclared range {range}"),
                    );
                }
                onto.add_object_property(ObjectPropertyDef { id, domain, range });
            }
            PropertyKind::Datatype => {
                let Some(range) = Datatype::from_xsd_iri(&range) else {
                    return self.reject(
                        ParseErrorKind::Unsupported,
                        pos,
                        format!("property {id} has unsupported datatype range {range}"),
                    );
                };
                onto.add_datatype_property(DatatypePropertyDef { id, domain, range });
            }
        }
        Ok(())
    }

    fn individual(
        &mut self,
        el: &Element,
        onto: &Ontology,
        individuals: &mut BTreeMap<Iri, Individual>,
        links: &mut Vec<PendingLink>,
    ) -> Result<(), ParseError> {
        let class = self.resolve(&el.iri(), el.pos)?;
        if onto.class(&class).is_none() {
            return self.reject(
                ParseErrorKind::Dangling,
                el.pos,
                format!("element `{}` names undeclared class {class}", el.qname),
            );
        }
        self.check_shape(el, &[(RDF_NS, "about"), (RDF_NS, "ID")])?;
        let Some(id) = self.node_id(el)? else {
            return self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("anonymous individual `{}`", el.qname),
            );
        };
        let mut ind = Individual::new(id.clone(), class);
        for c in &el.children {
            if c.is(RDF_NS, "type") {
                if let Some(t) = self.reference_child(c)? {
                    if onto.class(&t).is_some() {
                        ind.add_type(t);
                    } else {
                        self.reject(
                            ParseErrorKind::Dangling,
                            c.pos,
                            format!("rdf:type undeclared class {t}"),
                        )?;
                    }
                }
                continue;
            }
            let property = self.resolve(&c.iri(), c.pos)?;
            match onto.property_kind(&property) {
                Some(PropertyKind::Object) => {
                    if let Some(target) = self.reference_child(c)? {
                        links.push(PendingLink {
                            source: id.clone(),
                            property: property.clone(),
                            target: target.clone(),
                            pos: c.pos,
                        });
                        ind.add_object(property, target);
                    }
                }
                Some(PropertyKind::Datatype) => {
                    if let Some(value) = self.literal(c, onto, &property)? {
                        ind.add_data(property, value);
                    }
                }
                None => {
                    self.reject(
                        ParseErrorKind::Dangling,
                        c.pos,
                        format!("undeclared property {property}"),
                    )?;
                }
            }
        }
        match individuals.get_mut(&id) {
            Some(existing) => existing.absorb(&ind),
            None => {
                individuals.insert(id, ind);
            }
        }
        Ok(())
    }

    fn literal(
        &mut self,
        el: &Element,
        onto: &Ontology,
        property: &Iri,
    ) -> Result<Option<Literal>, ParseError> {
        let range = onto
            .datatype_property(property)
            .expect("checked by caller")
            .range;
        if !el.children.is_empty() || el.attr(RDF_NS, "resource").is_some() {
            self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("non-literal value for datatype property {property}"),
            )?;
            return Ok(None);
        }
        if let Some(a) = el
            .attrs
            .iter()
            .find(|a| !(a.ns == RDF_NS && a.local == "datatype"))
        {
            self.reject(
                ParseErrorKind::Unsupported,
                el.pos,
                format!("attribute `{}{}` on literal", a.ns, a.local),
            )?;
            return Ok(None);
        }
        if let Some(dt) = el.attr(RDF_NS, "datatype") {
            let dt_iri = self.resolve(dt, el.pos)?;
            match Datatype::from_xsd_iri(dt_iri.as_str()) {
                None => {
                    self.reject(
                        ParseErrorKind::Unsupported,
                        el.pos,
                        format!("literal datatype {dt_iri}"),
                    )?;
                    return Ok(None);
                }
                Some(d) if d != range => {
                    return Err(err(
                        ParseErrorKind::DatatypeMismatch,
                        el.pos,
                        format!("{property} expects {range}, literal is {d}"),
                    ));
                }
                Some(_) => {}
            }
        }
        Literal::new(el.text.clone(), range)
            .map(Some)
            .map_err(|e| err(ParseErrorKind::DatatypeMismatch, el.pos, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ENVELOPE_START: &str = r#"<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns="http://example.org/citizen#"
         xml:base="http://example.org/citizen">
"#;

    fn doc(body: &str) -> String {
        format!("{ENVELOPE_START}{body}\n</rdf:RDF>\n")
    }

    fn iri(local: &str) -> Iri {
        Iri::new(format!("http://example.org/citizen#{local}")).unwrap()
    }

    const SCHEMA: &str = r##"
  <owl:Class rdf:ID="Person"/>
  <owl:Class rdf:ID="BankAccount"/>
"##;

    #[test]
    fn has_bank_account_snippet() {
        let text = doc(&format!(
            r##"{SCHEMA}
<owl:ObjectProperty rdf:ID="hasBankAccount">
  <rdfs:domain rdf:resource="#Person" />
  <rdfs:range rdf:resource="#BankAccount" />
</owl:ObjectProperty>"##
        ));
        let (o, w) = parse_str(&text, ParseOptions::strict()).unwrap();
        assert!(w.is_empty());
        assert_eq!(
            o.object_properties(),
            &[ObjectPropertyDef {
                id: iri("hasBankAccount"),
                domain: iri("Person"),
                range: iri("BankAccount"),
            }]
        );
    }

    #[test]
    fn empty_envelope_is_empty_ontology() {
        let text = r#"<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"/>"#;
        let (o, w) = parse_str(text, ParseOptions::strict()).unwrap();
        assert_eq!(o, Ontology::default());
        assert!(w.is_empty());
    }

    #[test]
    fn typed_individuals_and_literals() {
        let text = doc(&format!(
            r##"{SCHEMA}
<owl:DatatypeProperty rdf:ID="dateOfBirth">
  <rdfs:domain rdf:resource="#Person"/>
  <rdfs:range rdf:resource="http://www.w3.org/2001/XMLSchema#date"/>
</owl:DatatypeProperty>
<Person rdf:ID="x">
  <dateOfBirth>1970-08-16</dateOfBirth>
</Person>
<Person rdf:about="http://example.org/citizen#y">
  <rdf:type rdf:resource="#BankAccount"/>
  <dateOfBirth rdf:datatype="http://www.w3.org/2001/XMLSchema#date">2000-03-03</dateOfBirth>
</Person>"##
        ));
        let (o, _) = parse_str(&text, ParseOptions::strict()).unwrap();
        let y = o.individual(&iri("y")).unwrap();
        assert_eq!(y.types(), &[iri("BankAccount"), iri("Person")]);
        assert_eq!(
            y.data_assertions()[0].value,
            Literal::date("2000-03-03").unwrap()
        );
        assert!(o.individual(&iri("x")).is_some());
    }

    #[test]
    fn datatype_mismatch_is_an_error_in_both_modes() {
        let text = doc(&format!(
            r##"{SCHEMA}
<owl:DatatypeProperty rdf:ID="dateOfBirth">
  <rdfs:domain rdf:resource="#Person"/>
  <rdfs:range rdf:resource="http://www.w3.org/2001/XMLSchema#date"/>
</owl:DatatypeProperty>
<Person rdf:ID="x"><dateOfBirth>16/08/1970</dateOfBirth></Person>"##
        ));
        for opts in [ParseOptions::strict(), ParseOptions::lenient()] {
            let e = parse_str(&text, opts).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::DatatypeMismatch);
            assert_eq!(e.position.line, 15);
        }
    }

    #[test]
    fn strict_rejects_what_lenient_drops() {
        let text = doc(&format!(
            r##"{SCHEMA}
<owl:ObjectProperty rdf:ID="isMarriedTo">
  <rdfs:domain rdf:resource="#Person"/>
  <rdfs:range rdf:resource="#Person"/>
</owl:ObjectProperty>
<owl:AnnotationProperty rdf:ID="note"/>
<Person rdf:ID="y"><isMarriedTo rdf:resource="#x"/></Person>"##
        ));
        let e = parse_str(&text, ParseOptions::strict()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Unsupported);
        assert_eq!(
            e.position,
            Position {
                line: 15,
                column: 1
            }
        );

        let (o, w) = parse_str(&text, ParseOptions::lenient()).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|w| w.action == "dropped"));
        assert!(o.validate().is_valid());
        assert!(o
            .individual(&iri("y"))
            .unwrap()
            .object_assertions()
            .is_empty());
    }

    #[test]
    fn dangling_reference_is_strict_error() {
        let text = doc(&format!(
            r##"{SCHEMA}
<Ghost rdf:ID="g"/>"##
        ));
        let e = parse_str(&text, ParseOptions::strict()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Dangling);
    }

    #[test]
    fn multiple_domains_rejected_in_strict_mode() {
        let text = doc(&format!(
            r##"{SCHEMA}
<owl:ObjectProperty rdf:ID="p">
  <rdfs:domain rdf:resource="#Person"/>
  <rdfs:domain rdf:resource="#BankAccount"/>
  <rdfs:range rdf:resource="#Person"/>
</owl:ObjectProperty>"##
        ));
        assert!(parse_str(&text, ParseOptions::strict()).is_err());
        let (o, w) = parse_str(&text, ParseOptions::lenient()).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(o.object_properties()[0].domain, iri("Person"));
    }

    #[test]
    fn cycle_is_invalid() {
        let text = doc(
            r##"<owl:Class rdf:ID="A"><rdfs:subClassOf rdf:resource="#B"/></owl:Class>
<owl:Class rdf:ID="B"><rdfs:subClassOf rdf:resource="#A"/></owl:Class>"##,
        );
        let e = parse_str(&text, ParseOptions::lenient()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Invalid);
    }

    #[test]
    fn relative_reference_without_base_is_invalid_iri() {
        let text = r##"<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
 xmlns:owl="http://www.w3.org/2002/07/owl#"><owl:Class rdf:ID="A"/></rdf:RDF>"##;
        let e = parse_str(text, ParseOptions::strict()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::InvalidIri);
    }

    #[test]
    fn invalid_utf8_is_an_encoding_error() {
        let e = parse(b"<a>\n\xff</a>", ParseOptions::strict()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Encoding);
        assert_eq!(e.position.line, 2);
    }
}

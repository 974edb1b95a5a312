//! Namespace-resolved XML element tree, the input to RDF/XML interpretation.

use quick_xml::events::{BytesStart, Event};
use quick_xml::name::ResolveResult;
use quick_xml::NsReader;

use super::{ParseError, ParseErrorKind, Position};

#[derive(Debug, Clone)]
pub(crate) struct Attr {
    pub ns: String,
    pub local: String,
    pub value: String,
}

#[derive(Debug, Clone)]
pub(crate) struct Element {
    pub ns: String,
    pub local: String,
    pub qname: String,
    pub attrs: Vec<Attr>,
    /// `(prefix, namespace)`; the default namespace has an empty prefix.
    pub xmlns: Vec<(String, String)>,
    pub children: Vec<Element>,
    pub text: String,
    pub pos: Position,
}

impl Element {
    pub fn is(&self, ns: &str, local: &str) -> bool {
        self.ns == ns && self.local == local
    }

    pub fn iri(&self) -> String {
        format!("{}{}", self.ns, self.local)
    }

    pub fn attr(&self, ns: &str, local: &str) -> Option<&str> {
        self.attrs
            .iter()
            .find(|a| a.ns == ns && a.local == local)
            .map(|a| a.value.as_str())
    }
}

/// Maps byte offsets to 1-based line/column (columns count chars).
pub(crate) struct LineIndex<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
}

impl<'a> LineIndex<'a> {
    pub fn new(text: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        LineIndex { text, line_starts }
    }

    pub fn position(&self, offset: usize) -> Position {
        let offset = offset.min(self.text.len());
        let line = self.line_starts.partition_point(|&s| s <= offset);
        let start = self.line_starts[line - 1];
        let column = self
            .text
            .get(start..offset)
            .map(|s| s.chars().count())
            .unwrap_or(offset - start)
            + 1;
        Position { line, column }
    }
}

#[derive(Debug)]
pub(crate) struct Document {
    pub root: Element,
    /// Positions of `<!DOCTYPE ...>` declarations, which are never interpreted.
    pub doctypes: Vec<Position>,
}

fn xml_error(pos: Position, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Xml,
        position: pos,
        message: message.into(),
    }
}

pub(crate) fn read_document(text: &str) -> Result<Document, ParseError> {
    let index = LineIndex::new(text);
    let mut reader = NsReader::from_str(text);
    reader.config_mut().check_end_names = true;

    let mut stack: Vec<Element> = Vec::new();
    let mut root: Option<Element> = None;
    let mut doctypes = Vec::new();

    loop {
        let start = reader.buffer_position() as usize;
        let pos = index.position(start);
        let (resolved, event) = match reader.read_resolved_event() {
            Ok((r, ev)) => (owned_resolution(&r), ev),
            Err(e) => {
                let at = index.position(reader.error_position() as usize);
                return Err(xml_error(at, e.to_string()));
            }
        };
        match event {
            Event::Decl(decl) => {
                if let Some(enc) = decl.encoding() {
                    let enc = enc.map_err(|e| xml_error(pos, e.to_string()))?;
                    if !enc.eq_ignore_ascii_case(b"utf-8") {
                        return Err(ParseError {
                            kind: ParseErrorKind::Encoding,
                            position: pos,
                            message: format!(
                                "declared encoding `{}` is not UTF-8",
                                String::from_utf8_lossy(&enc)
                            ),
                        });
                    }
                }
            }
            Event::DocType(_) => doctypes.push(pos),
            Event::Start(e) => {
                let el = open_element(&reader, &resolved, &e, pos)?;
                stack.push(el);
            }
            Event::Empty(e) => {
                let el = open_element(&reader, &resolved, &e, pos)?;
                close_element(&mut stack, &mut root, el, pos)?;
            }
            Event::End(_) => {
                let el = stack
                    .pop()
                    .ok_or_else(|| xml_error(pos, "unexpected end tag"))?;
                close_element(&mut stack, &mut root, el, pos)?;
            }
            Event::Text(t) => {
                let s = t.unescape().map_err(|e| xml_error(pos, e.to_string()))?;
                match stack.last_mut() {
                    Some(top) => top.text.push_str(&s),
                    None if s.trim().is_empty() => {}
                    None => return Err(xml_error(pos, "text outside the root element")),
                }
            }
            Event::CData(c) => {
                let s = std::str::from_utf8(&c).map_err(|e| xml_error(pos, e.to_string()))?;
                match stack.last_mut() {
                    Some(top) => top.text.push_str(s),
                    None => return Err(xml_error(pos, "CDATA outside the root element")),
                }
            }
            Event::Comment(_) | Event::PI(_) => {}
            Event::Eof => break,
        }
    }
    if let Some(open) = stack.last() {
        return Err(xml_error(
            index.position(text.len()),
            format!("unclosed element `{}`", open.qname),
        ));
    }
    let root = root.ok_or_else(|| xml_error(index.position(text.len()), "no root element"))?;
    Ok(Document { root, doctypes })
}

fn close_element(
    stack: &mut [Element],
    root: &mut Option<Element>,
    el: Element,
    pos: Position,
) -> Result<(), ParseError> {
    match stack.last_mut() {
        Some(parent) => parent.children.push(el),
        None if root.is_none() => *root = Some(el),
        None => return Err(xml_error(pos, "more than one root element")),
    }
    Ok(())
}

/// `Ok(namespace)` (empty when unbound) or `Err(unknown prefix)`.
type Resolution = Result<String, String>;

fn owned_resolution(r: &ResolveResult) -> Resolution {
    match r {
        ResolveResult::Bound(ns) => Ok(String::from_utf8_lossy(ns.as_ref()).into_owned()),
        ResolveResult::Unbound => Ok(String::new()),
        ResolveResult::Unknown(p) => Err(String::from_utf8_lossy(p).into_owned()),
    }
}

fn resolved_ns(r: &Resolution, pos: Position, what: &str) -> Result<String, ParseError> {
    r.clone()
        .map_err(|p| xml_error(pos, format!("unbound prefix `{p}` on {what}")))
}

fn open_element(
    reader: &NsReader<&[u8]>,
    resolved: &Resolution,
    e: &BytesStart,
    pos: Position,
) -> Result<Element, ParseError> {
    let qname = String::from_utf8_lossy(e.name().as_ref()).into_owned();
    let ns = resolved_ns(resolved, pos, &qname)?;
    let local = String::from_utf8_lossy(e.local_name().as_ref()).into_owned();
    let mut attrs = Vec::new();
    let mut xmlns = Vec::new();
    for attr in e.attributes() {
        let attr = attr.map_err(|err| xml_error(pos, err.to_string()))?;
        let value = attr
            .unescape_value()
            .map_err(|err| xml_error(pos, err.to_string()))?
            .into_owned();
        let key = attr.key.as_ref();
        if key == b"xmlns" {
            xmlns.push((String::new(), value));
            continue;
        }
        if let Some(prefix) = key.strip_prefix(b"xmlns:") {
            xmlns.push((String::from_utf8_lossy(prefix).into_owned(), value));
            continue;
        }
        let (r, local) = reader.resolve_attribute(attr.key);
        let key_str = String::from_utf8_lossy(key).into_owned();
        attrs.push(Attr {
            ns: resolved_ns(&owned_resolution(&r), pos, &key_str)?,
            local: String::from_utf8_lossy(local.as_ref()).into_owned(),
            value,
        });
    }
    Ok(Element {
        ns,
        local,
        qname,
        attrs,
        xmlns,
        children: Vec::new(),
        text: String::new(),
        pos,
    })
}

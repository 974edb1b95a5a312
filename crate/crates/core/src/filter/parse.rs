use thiserror::Error;

use super::{CompareOp, FilterExpr};
use crate::model::{
    is_ncname, parse_dmy_date, parse_iso_date, Datatype, Iri, Literal, NamespaceMap,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterParseErrorKind {
    Syntax,
    UnknownPrefix,
}

/// `column` is the 1-based character offset into the filter text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct FilterParseError {
    pub kind: FilterParseErrorKind,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Slash,
    Op(CompareOp),
    /// `prefix:local`, `:local` or bare `local` (prefix `None`).
    Name(Option<String>, String),
    Iri(String),
    Quoted(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn syntax(column: usize, message: impl Into<String>) -> FilterParseError {
    FilterParseError {
        kind: FilterParseErrorKind::Syntax,
        column,
        message: message.into(),
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

fn lex(text: &str) -> Result<Vec<Token>, FilterParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let next = chars.get(i + 1).copied();
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, column });
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                push(&mut out, Tok::LParen);
                i += 1;
            }
            ')' => {
                push(&mut out, Tok::RParen);
                i += 1;
            }
            '/' => {
                push(&mut out, Tok::Slash);
                i += 1;
            }
            '=' => {
                push(&mut out, Tok::Op(CompareOp::Eq));
                i += 1;
            }
            '!' if next == Some('=') => {
                push(&mut out, Tok::Op(CompareOp::Ne));
                i += 2;
            }
            '<' if next.is_some_and(|n| n.is_ascii_alphabetic()) => {
                let end = chars[i..]
                    .iter()
                    .position(|&ch| ch == '>')
                    .ok_or_else(|| syntax(column, "unterminated `<iri>`"))?;
                let iri: String = chars[i + 1..i + end].iter().collect();
                push(&mut out, Tok::Iri(iri));
                i += end + 1;
            }
            '<' | '>' => {
                let eq = next == Some('=');
                let op = match (c, eq) {
                    ('<', false) => CompareOp::Lt,
                    ('<', true) => CompareOp::Le,
                    ('>', false) => CompareOp::Gt,
                    _ => CompareOp::Ge,
                };
                push(&mut out, Tok::Op(op));
                i += if eq { 2 } else { 1 };
            }
            '\'' => {
                let mut s = String::new();
                let mut j = i + 1;
                loop {
                    match chars.get(j) {
                        None => return Err(syntax(column, "unterminated literal")),
                        Some('\'') => break,
                        Some('\\') => match chars.get(j + 1) {
                            Some(&e @ ('\'' | '\\')) => {
                                s.push(e);
                                j += 2;
                            }
                            _ => return Err(syntax(j + 1, "invalid escape in literal")),
                        },
                        Some(&ch) => {
                            s.push(ch);
                            j += 1;
                        }
                    }
                }
                push(&mut out, Tok::Quoted(s));
                i = j + 1;
            }
            _ if c == ':' || is_name_char(c) => {
                let start = i;
                while i < chars.len() && (chars[i] == ':' || is_name_char(chars[i])) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.split_once(':') {
                    Some((p, l)) => {
                        if l.contains(':') {
                            return Err(syntax(column, format!("malformed name `{word}`")));
                        }
                        Tok::Name(Some(p.to_owned()), l.to_owned())
                    }
                    None => Tok::Name(None, word),
                };
                push(&mut out, tok);
            }
            _ => return Err(syntax(column, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    end_column: usize,
    ns: &'a NamespaceMap,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|t| t.column)
            .unwrap_or(self.end_column)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Name(None, w)) if w.eq_ignore_ascii_case(kw))
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), FilterParseError> {
        let column = self.column();
        match self.next() {
            Some(t) if &t.tok == want => Ok(()),
            _ => Err(syntax(column, format!("expected {what}"))),
        }
    }

    fn or(&mut self) -> Result<FilterExpr, FilterParseError> {
        let mut children = vec![self.and()?];
        while self.keyword("or") {
            self.pos += 1;
            children.push(self.and()?);
        }
        Ok(if children.len() == 1 {
            children.pop().unwrap()
        } else {
            FilterExpr::Or(children)
        })
    }

    fn and(&mut self) -> Result<FilterExpr, FilterParseError> {
        let mut children = vec![self.unary()?];
        while self.keyword("and") {
            self.pos += 1;
            children.push(self.unary()?);
        }
        Ok(if children.len() == 1 {
            children.pop().unwrap()
        } else {
            FilterExpr::And(children)
        })
    }

    fn unary(&mut self) -> Result<FilterExpr, FilterParseError> {
        if self.keyword("not") {
            self.pos += 1;
            return Ok(FilterExpr::negate(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<FilterExpr, FilterParseError> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let inner = self.or()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(inner);
        }
        if self.keyword("true") {
            self.pos += 1;
            return Ok(FilterExpr::True);
        }
        if self.keyword("false") {
            self.pos += 1;
            return Ok(FilterExpr::False);
        }
        if self.keyword("type") {
            self.pos += 1;
            self.expect(&Tok::Op(CompareOp::Eq), "`=` after `type`")?;
            let class = self.name()?;
            return Ok(FilterExpr::Type { class });
        }

        let mut path = vec![self.name()?];
        while self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            path.push(self.name()?);
        }
        let op_column = self.column();
        let op = match self.next() {
            Some(Token {
                tok: Tok::Op(op), ..
            }) => op,
            _ => return Err(syntax(op_column, "expected a comparison operator")),
        };
        if path.len() > 1 {
            if op != CompareOp::Eq {
                return Err(syntax(op_column, "property paths only support `=`"));
            }
            let target = self.name()?;
            return Ok(FilterExpr::Path { path, target });
        }
        let property = path.pop().unwrap();
        if let Some(Tok::Quoted(_)) = self.peek() {
            let Some(Token {
                tok: Tok::Quoted(s),
                column,
            }) = self.next()
            else {
                unreachable!()
            };
            let value = infer_literal(&s).map_err(|m| syntax(column, m))?;
            return Ok(FilterExpr::Data {
                property,
                op,
                value,
            });
        }
        if op != CompareOp::Eq {
            return Err(syntax(
                self.column(),
                format!("expected a quoted literal after `{}`", op.symbol()),
            ));
        }
        let target = self.name()?;
        Ok(FilterExpr::Object { property, target })
    }

    fn name(&mut self) -> Result<Iri, FilterParseError> {
        let column = self.column();
        let tok = self.next().map(|t| t.tok);
        match tok {
            Some(Tok::Iri(s)) => Iri::new(s).map_err(|e| syntax(column, e.to_string())),
            Some(Tok::Name(prefix, local)) => {
                if !local.is_empty() && !is_ncname(&local) {
                    return Err(syntax(
                        column,
                        format!("`{local}` is not a valid local name"),
                    ));
                }
                let p = prefix.as_deref().unwrap_or("");
                self.ns.expand(p, &local).ok_or_else(|| FilterParseError {
                    kind: FilterParseErrorKind::UnknownPrefix,
                    column,
                    message: if p.is_empty() {
                        "no default namespace to resolve against".to_owned()
                    } else {
                        format!("unknown prefix `{p}`")
                    },
                })
            }
            _ => Err(syntax(column, "expected a name")),
        }
    }
}

/// Picks a datatype for a quoted literal from its shape. The evaluator
/// re-reads it under the property's declared range.
fn infer_literal(s: &str) -> Result<Literal, String> {
    if parse_iso_date(s).is_some() {
        return Literal::date(s).map_err(|e| e.to_string());
    }
    if let Some(d) = parse_dmy_date(s) {
        return Literal::date(&d.format("%Y-%m-%d").to_string()).map_err(|e| e.to_string());
    }
    for dt in [Datatype::Integer, Datatype::Decimal] {
        if let Ok(l) = Literal::new(s, dt) {
            return Ok(l);
        }
    }
    if s == "true" || s == "false" {
        return Ok(Literal::boolean(s == "true"));
    }
    Literal::string(s).map_err(|e| e.to_string())
}

/// Parses a filter, resolving names against `ns`.
pub fn parse_filter(text: &str, ns: &NamespaceMap) -> Result<FilterExpr, FilterParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
        ns,
    };
    if p.peek().is_none() {
        return Err(syntax(1, "empty filter"));
    }
    let expr = p.or()?;
    if p.peek().is_some() {
        return Err(syntax(p.column(), "unexpected trailing input"));
    }
    Ok(expr)
}

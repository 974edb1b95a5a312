use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::iri::XSD_NS;

/// The datatypes a literal (and a datatype property range) may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Datatype {
    String,
    Integer,
    Decimal,
    Boolean,
    Date,
}

impl Datatype {
    pub const ALL: [Datatype; 5] = [
        Datatype::String,
        Datatype::Integer,
        Datatype::Decimal,
        Datatype::Boolean,
        Datatype::Date,
    ];

    pub fn local_name(self) -> &'static str {
        match self {
            Datatype::String => "string",
            Datatype::Integer => "integer",
            Datatype::Decimal => "decimal",
            Datatype::Boolean => "boolean",
            Datatype::Date => "date",
        }
    }

    pub fn xsd_iri(self) -> String {
        format!("{XSD_NS}{}", self.local_name())
    }

    pub fn from_xsd_iri(iri: &str) -> Option<Self> {
        let local = iri.strip_prefix(XSD_NS)?;
        Datatype::ALL.into_iter().find(|d| d.local_name() == local)
    }

    /// Whether `<`, `<=`, `>`, `>=` are defined on values of this type.
    pub fn is_ordered(self) -> bool {
        matches!(self, Datatype::Integer | Datatype::Decimal | Datatype::Date)
    }
}

impl fmt::Display for Datatype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xsd:{}", self.local_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{lexical}` is not a valid {datatype} lexical form")]
pub struct LiteralError {
    pub lexical: String,
    pub datatype: Datatype,
}

/// A typed literal whose lexical form has been checked against its datatype.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    datatype: Datatype,
    lexical: String,
}

impl Literal {
    pub fn new(lexical: impl Into<String>, datatype: Datatype) -> Result<Self, LiteralError> {
        let lexical = lexical.into();
        if !is_valid_lexical(&lexical, datatype) {
            return Err(LiteralError { lexical, datatype });
        }
        Ok(Literal { datatype, lexical })
    }

    pub fn string(s: impl Into<String>) -> Result<Self, LiteralError> {
        Self::new(s, Datatype::String)
    }

    pub fn integer(i: i64) -> Self {
        Literal {
            datatype: Datatype::Integer,
            lexical: i.to_string(),
        }
    }

    pub fn date(iso: &str) -> Result<Self, LiteralError> {
        Self::new(iso, Datatype::Date)
    }

    pub fn boolean(b: bool) -> Self {
        Literal {
            datatype: Datatype::Boolean,
            lexical: b.to_string(),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> Datatype {
        self.datatype
    }

    /// Re-reads the lexical form under another datatype.
    pub fn reinterpret(&self, datatype: Datatype) -> Result<Literal, LiteralError> {
        Literal::new(self.lexical.clone(), datatype)
    }

    fn value(&self) -> Value<'_> {
        // lexical forms are validated on construction
        match self.datatype {
            Datatype::String => Value::Str(&self.lexical),
            Datatype::Integer | Datatype::Decimal => {
                Value::Num(parse_decimal(&self.lexical).expect("validated numeric"))
            }
            Datatype::Boolean => Value::Bool(matches!(self.lexical.as_str(), "true" | "1")),
            Datatype::Date => Value::Date(parse_iso_date(&self.lexical).expect("validated date")),
        }
    }

    /// Typed comparison. `None` when the two values are not comparable
    /// (different value spaces; integer and decimal share one).
    pub fn compare(&self, other: &Literal) -> Option<Ordering> {
        match (self.value(), other.value()) {
            (Value::Str(a), Value::Str(b)) => Some(a.cmp(b)),
            (Value::Num(a), Value::Num(b)) => Some(a.cmp(&b)),
            (Value::Bool(a), Value::Bool(b)) => Some(a.cmp(&b)),
            (Value::Date(a), Value::Date(b)) => Some(a.cmp(&b)),
            _ => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}'^^{}", self.lexical, self.datatype)
    }
}

enum Value<'a> {
    Str(&'a str),
    Num(BigRational),
    Bool(bool),
    Date(NaiveDate),
}

fn is_valid_lexical(s: &str, datatype: Datatype) -> bool {
    match datatype {
        Datatype::String => s.chars().all(is_xml_char),
        Datatype::Integer => is_integer_lexical(s),
        Datatype::Decimal => parse_decimal(s).is_some(),
        Datatype::Boolean => matches!(s, "true" | "false" | "1" | "0"),
        Datatype::Date => parse_iso_date(s).is_some(),
    }
}

fn is_xml_char(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\r') || (c >= ' ' && c != '\u{FFFE}' && c != '\u{FFFF}')
}

fn is_integer_lexical(s: &str) -> bool {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// `[+-]? (digits ('.' digits?)? | '.' digits)` as an exact rational.
pub(crate) fn parse_decimal(s: &str) -> Option<BigRational> {
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Strict `YYYY-MM-DD`.
pub(crate) fn parse_iso_date(s: &str) -> Option<NaiveDate> {
    let b = s.as_bytes();
    if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
        return None;
    }
    if !b
        .iter()
        .enumerate()
        .all(|(i, c)| i == 4 || i == 7 || c.is_ascii_digit())
    {
        return None;
    }
    NaiveDate::parse_from_str(s, "%Y-%m-%d").ok()
}

/// `DD/MM/YYYY` display form, normalized to ISO.
pub(crate) fn parse_dmy_date(s: &str) -> Option<NaiveDate> {
    let b = s.as_bytes();
    if b.len() != 10 || b[2] != b'/' || b[5] != b'/' {
        return None;
    }
    let iso = format!("{}-{}-{}", &s[6..10], &s[3..5], &s[0..2]);
    parse_iso_date(&iso)
}

//! The generator's record of where it put people, used as a test oracle.
//!
//! Text form, one `key=value` per line, `#` comments and blank lines ignored:
//!
//! ```text
//! seed=42
//! individuals=1000
//! men=497
//! women=503
//! city.City0.country=Country0
//! city.City0.persons=250
//! country.Country0.cities=2
//! country.Country0.persons=500
//! ```
//!
//! Cities and countries appear in index order.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CityAllocation {
    pub name: String,
    pub country: String,
    pub persons: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountryAllocation {
    pub name: String,
    pub cities: usize,
    pub persons: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationTable {
    pub seed: u64,
    pub individuals: usize,
    pub men: usize,
    pub women: usize,
    pub cities: Vec<CityAllocation>,
    pub countries: Vec<CountryAllocation>,
}

impl AllocationTable {
    pub fn city(&self, name: &str) -> Option<&CityAllocation> {
        self.cities.iter().find(|c| c.name == name)
    }

    pub fn country(&self, name: &str) -> Option<&CountryAllocation> {
        self.countries.iter().find(|c| c.name == name)
    }

    pub fn parse(text: &str) -> Result<Self, AllocationParseError> {
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        let mut city_order: Vec<&str> = Vec::new();
        let mut country_order: Vec<&str> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or(AllocationParseError::Syntax { line: n + 1 })?;
            let (k, v) = (k.trim(), v.trim());
            let mut parts = k.splitn(3, '.');
            match (parts.next(), parts.next(), parts.next()) {
                (Some("city"), Some(name), Some(_)) if !city_order.contains(&name) => {
                    city_order.push(name)
                }
                (Some("country"), Some(name), Some(_)) if !country_order.contains(&name) => {
                    country_order.push(name)
                }
                _ => {}
            }
            if fields.insert(k, v).is_some() {
                return Err(AllocationParseError::Duplicate(k.to_owned()));
            }
        }
        let get = |k: &str| -> Result<&str, AllocationParseError> {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| AllocationParseError::Missing(k.to_owned()))
        };
        let num = |k: &str| -> Result<usize, AllocationParseError> {
            get(k)?
                .parse()
                .map_err(|_| AllocationParseError::Value(k.to_owned()))
        };
        let seed = get("seed")?
            .parse()
            .map_err(|_| AllocationParseError::Value("seed".into()))?;
        let cities = city_order
            .iter()
            .map(|c| {
                Ok(CityAllocation {
                    name: (*c).to_owned(),
                    country: get(&format!("city.{c}.country"))?.to_owned(),
                    persons: num(&format!("city.{c}.persons"))?,
                })
            })
            .collect::<Result<_, AllocationParseError>>()?;
        let countries = country_order
            .iter()
            .map(|c| {
                Ok(CountryAllocation {
                    name: (*c).to_owned(),
                    cities: num(&format!("country.{c}.cities"))?,
                    persons: num(&format!("country.{c}.persons"))?,
                })
            })
            .collect::<Result<_, AllocationParseError>>()?;
        Ok(AllocationTable {
            seed,
            individuals: num("individuals")?,
            men: num("men")?,
            women: num("women")?,
            cities,
            countries,
        })
    }
}

impl fmt::Display for AllocationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed={}", self.seed)?;
        writeln!(f, "individuals={}", self.individuals)?;
        writeln!(f, "men={}", self.men)?;
        writeln!(f, "women={}", self.women)?;
        for c in &self.cities {
            writeln!(f, "city.{}.country={}", c.name, c.country)?;
            writeln!(f, "city.{}.persons={}", c.name, c.persons)?;
        }
        for c in &self.countries {
            writeln!(f, "country.{}.cities={}", c.name, c.cities)?;
            writeln!(f, "country.{}.persons={}", c.name, c.persons)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AllocationParseError {
    #[error("line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("duplicate key `{0}`")]
    Duplicate(String),
    #[error("missing key `{0}`")]
    Missing(String),
    #[error("bad value for `{0}`")]
    Value(String),
}

//! The citizen ontology and seeded synthetic populations for it.
//!
//! Randomness comes from ChaCha8 seeded with `PopulationParams::seed`, one
//! stream per purpose (city assignment, person attributes, family edges),
//! so the output depends on nothing but the schema and the parameters.

use chrono::NaiveDate;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{
    parse_iso_date, ClassDef, Datatype, DatatypePropertyDef, Header, Individual, Iri, Literal,
    NamespaceMap, ObjectPropertyDef, Ontology,
};

mod allocation;

pub use allocation::{AllocationParseError, AllocationTable, CityAllocation, CountryAllocation};

pub const CITIZEN_BASE: &str = "http://example.org/citizen";
pub const CITIZEN_NS: &str = "http://example.org/citizen#";

/// `CITIZEN_NS` + `local`.
pub fn citizen(local: &str) -> Iri {
    Iri::new(format!("{CITIZEN_NS}{local}")).expect("valid citizen IRI")
}

pub const CITIZEN_CLASSES: [&str; 10] = [
    "Person",
    "Man",
    "Woman",
    "City",
    "Country",
    "Email",
    "BankAccount",
    "School",
    "Club",
    "Party",
];

/// Object properties of `Person`: `(name, range)`.
pub const PERSON_OBJECT_PROPERTIES: [(&str, &str); 8] = [
    ("hasAsFather", "Man"),
    ("hasAsMother", "Woman"),
    ("livesIn", "City"),
    ("hasEmail", "Email"),
    ("hasBankAccount", "BankAccount"),
    ("studiesIn", "School"),
    ("isClubMember", "Club"),
    ("IsPartyMember", "Party"),
];

pub const PERSON_DATATYPE_PROPERTIES: [(&str, Datatype); 4] = [
    ("lastName", Datatype::String),
    ("firstName", Datatype::String),
    ("dateOfBirth", Datatype::Date),
    ("personAddress", Datatype::String),
];

/// Object properties outside `Person`: `(name, domain, range)`.
const OTHER_OBJECT_PROPERTIES: [(&str, &str, &str); 4] = [
    ("isMarriedTo", "Man", "Woman"),
    ("hasABondOfBrotherhood", "Man", "Man"),
    ("isFriendOf", "Woman", "Woman"),
    ("isLocatedIn", "City", "Country"),
];

const OTHER_DATATYPE_PROPERTIES: [(&str, &str, Datatype); 9] = [
    ("cityName", "City", Datatype::String),
    ("population", "City", Datatype::Integer),
    ("countryName", "Country", Datatype::String),
    ("area", "Country", Datatype::Decimal),
    ("emailAddress", "Email", Datatype::String),
    ("accountNumber", "BankAccount", Datatype::String),
    ("schoolName", "School", Datatype::String),
    ("clubName", "Club", Datatype::String),
    ("partyName", "Party", Datatype::String),
];

/// The citizen schema: ten classes, `Man` and `Woman` under `Person`,
/// twelve `Person` properties, and no individuals.
pub fn build_citizen_schema() -> Ontology {
    let mut ns = NamespaceMap::with_base(Iri::new(CITIZEN_BASE).unwrap());
    ns.bind("", Iri::new(CITIZEN_NS).unwrap()).unwrap();
    let mut o = Ontology::new(ns);
    let mut header = Header::new(Iri::new(CITIZEN_BASE).unwrap());
    header
        .comments
        .push("Citizens, where they live, and what they belong to.".into());
    o.set_header(Some(header));

    for c in CITIZEN_CLASSES {
        let mut def = ClassDef::new(citizen(c));
        if c == "Man" || c == "Woman" {
            def = def.with_super(citizen("Person"));
        }
        o.add_class(def);
    }
    let object = |id: &str, domain: &str, range: &str| ObjectPropertyDef {
        id: citizen(id),
        domain: citizen(domain),
        range: citizen(range),
    };
    let datatype = |id: &str, domain: &str, range| DatatypePropertyDef {
        id: citizen(id),
        domain: citizen(domain),
        range,
    };
    for (p, range) in PERSON_OBJECT_PROPERTIES {
        o.add_object_property(object(p, "Person", range));
    }
    for (p, domain, range) in OTHER_OBJECT_PROPERTIES {
        o.add_object_property(object(p, domain, range));
    }
    for (p, range) in PERSON_DATATYPE_PROPERTIES {
        o.add_datatype_property(datatype(p, "Person", range));
    }
    for (p, domain, range) in OTHER_DATATYPE_PROPERTIES {
        o.add_datatype_property(datatype(p, domain, range));
    }
    o
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopulationParams {
    pub n_individuals: usize,
    pub n_cities: usize,
    pub n_countries: usize,
    pub seed: u64,
    /// Inclusive `(min, max)` ISO dates for `dateOfBirth`.
    pub date_range: (String, String),
}

impl PopulationParams {
    /// Births between 1940-01-01 and 2010-12-31.
    pub fn new(n_individuals: usize, n_cities: usize, n_countries: usize, seed: u64) -> Self {
        PopulationParams {
            n_individuals,
            n_cities,
            n_countries,
            seed,
            date_range: ("1940-01-01".into(), "2010-12-31".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("need n_cities >= n_countries >= 1 (got {cities} cities, {countries} countries)")]
    Geography { cities: usize, countries: usize },
    #[error("invalid date range: {0}")]
    DateRange(String),
    #[error("schema lacks {0}; expected the citizen schema")]
    Schema(Iri),
}

const STREAM_CITIES: u64 = 1;
const STREAM_PEOPLE: u64 = 2;
const STREAM_EDGES: u64 = 3;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

const MALE_NAMES: [&str; 12] = [
    "Ahmed", "Youssef", "Omar", "Karim", "Hassan", "Mehdi", "Anas", "Hamza", "Adam", "Rayan",
    "Said", "Driss",
];
const FEMALE_NAMES: [&str; 12] = [
    "Fatima", "Aicha", "Salma", "Khadija", "Imane", "Sara", "Nadia", "Leila", "Meryem", "Zineb",
    "Hind", "Ghita",
];
const LAST_NAMES: [&str; 12] = [
    "Alaoui",
    "Bennani",
    "Tazi",
    "Idrissi",
    "Berrada",
    "Chraibi",
    "Fassi",
    "Lahlou",
    "Naciri",
    "Sebti",
    "Amrani",
    "Benjelloun",
];
const STREETS: [&str; 6] = [
    "Avenue Hassan II",
    "Rue de Fes",
    "Boulevard Zerktouni",
    "Rue Ibn Batouta",
    "Avenue des FAR",
    "Rue Allal Ben Abdellah",
];

pub fn person_name(i: usize, n: usize) -> String {
    let width = n.saturating_sub(1).to_string().len().max(4);
    format!("person{i:0width$}")
}

/// Adds countries, cities and `n_individuals` people to a copy of `schema`.
///
/// People are spread over cities as evenly as possible (the first
/// `n % n_cities` cities get one extra) in a shuffled order, and cities over
/// countries round-robin. Family, marriage and friendship edges only join
/// people of the same city.
pub fn generate_population(
    schema: &Ontology,
    p: &PopulationParams,
) -> Result<(Ontology, AllocationTable), FixtureError> {
    if p.n_countries == 0 || p.n_cities < p.n_countries {
        return Err(FixtureError::Geography {
            cities: p.n_cities,
            countries: p.n_countries,
        });
    }
    let min = parse_iso_date(&p.date_range.0)
        .ok_or_else(|| FixtureError::DateRange(p.date_range.0.clone()))?;
    let max = parse_iso_date(&p.date_range.1)
        .ok_or_else(|| FixtureError::DateRange(p.date_range.1.clone()))?;
    if max < min {
        return Err(FixtureError::DateRange(format!(
            "{} is after {}",
            p.date_range.0, p.date_range.1
        )));
    }
    for c in ["Person", "Man", "Woman", "City", "Country"] {
        if schema.class(&citizen(c)).is_none() {
            return Err(FixtureError::Schema(citizen(c)));
        }
    }

    let mut o = schema.copy_structure();
    let mut table = AllocationTable {
        seed: p.seed,
        individuals: p.n_individuals,
        men: 0,
        women: 0,
        cities: Vec::new(),
        countries: Vec::new(),
    };

    for k in 0..p.n_countries {
        let name = format!("Country{k}");
        o.add_individual(
            Individual::new(citizen(&name), citizen("Country"))
                .with_data(
                    citizen("countryName"),
                    Literal::string(format!("Country {k}")).unwrap(),
                )
                .with_data(
                    citizen("area"),
                    Literal::new(format!("{}.5", 1000 + 250 * k), Datatype::Decimal).unwrap(),
                ),
        );
        table.countries.push(CountryAllocation {
            name,
            cities: 0,
            persons: 0,
        });
    }

    let mut city_rng = rng(p.seed, STREAM_CITIES);
    let mut assignment: Vec<usize> = (0..p.n_individuals).map(|i| i % p.n_cities).collect();
    assignment.shuffle(&mut city_rng);

    for c in 0..p.n_cities {
        let name = format!("City{c}");
        let country = c % p.n_countries;
        let persons = assignment.iter().filter(|&&a| a == c).count();
        o.add_individual(
            Individual::new(citizen(&name), citizen("City"))
                .with_data(
                    citizen("cityName"),
                    Literal::string(format!("City {c}")).unwrap(),
                )
                .with_data(
                    citizen("population"),
                    Literal::integer(city_rng.gen_range(10_000..5_000_000)),
                )
                .with_object(
                    citizen("isLocatedIn"),
                    citizen(&format!("Country{country}")),
                ),
        );
        table.countries[country].cities += 1;
        table.countries[country].persons += persons;
        table.cities.push(CityAllocation {
            name,
            country: format!("Country{country}"),
            persons,
        });
    }

    let span = (max - min).num_days();
    let mut people_rng = rng(p.seed, STREAM_PEOPLE);
    let mut people: Vec<Individual> = Vec::with_capacity(p.n_individuals);
    let mut men_by_city: Vec<Vec<usize>> = vec![Vec::new(); p.n_cities];
    let mut women_by_city: Vec<Vec<usize>> = vec![Vec::new(); p.n_cities];
    for (i, &city) in assignment.iter().enumerate() {
        let is_man = people_rng.gen_bool(0.5);
        let (class, first) = if is_man {
            men_by_city[city].push(i);
            table.men += 1;
            ("Man", MALE_NAMES.choose(&mut people_rng).unwrap())
        } else {
            women_by_city[city].push(i);
            table.women += 1;
            ("Woman", FEMALE_NAMES.choose(&mut people_rng).unwrap())
        };
        let last = LAST_NAMES.choose(&mut people_rng).unwrap();
        let born: NaiveDate = min + chrono::Duration::days(people_rng.gen_range(0..=span));
        let street = STREETS.choose(&mut people_rng).unwrap();
        let number = people_rng.gen_range(1..200);
        people.push(
            Individual::new(citizen(&person_name(i, p.n_individuals)), citizen(class))
                .with_data(citizen("firstName"), Literal::string(*first).unwrap())
                .with_data(citizen("lastName"), Literal::string(*last).unwrap())
                .with_data(
                    citizen("dateOfBirth"),
                    Literal::date(&born.format("%Y-%m-%d").to_string()).unwrap(),
                )
                .with_data(
                    citizen("personAddress"),
                    Literal::string(format!("{number} {street}, City {city}")).unwrap(),
                )
                .with_object(citizen("livesIn"), citizen(&format!("City{city}"))),
        );
    }

    let mut edge_rng = rng(p.seed, STREAM_EDGES);
    let name = |i: usize| citizen(&person_name(i, p.n_individuals));
    let pick_other = |rng: &mut ChaCha8Rng, pool: &[usize], not: usize| -> Option<usize> {
        let others: Vec<usize> = pool.iter().copied().filter(|&x| x != not).collect();
        others.choose(rng).copied()
    };
    for city in 0..p.n_cities {
        let (men, women) = (&men_by_city[city], &women_by_city[city]);
        for &i in men.iter().chain(women.iter()) {
            if edge_rng.gen_bool(0.6) {
                if let Some(f) = pick_other(&mut edge_rng, men, i) {
                    people[i].add_object(citizen("hasAsFather"), name(f));
                }
            }
            if edge_rng.gen_bool(0.6) {
                if let Some(m) = pick_other(&mut edge_rng, women, i) {
                    people[i].add_object(citizen("hasAsMother"), name(m));
                }
            }
        }
        let mut husbands = men.clone();
        let mut wives = women.clone();
        husbands.shuffle(&mut edge_rng);
        wives.shuffle(&mut edge_rng);
        let couples = husbands.len().min(wives.len()) / 2;
        for (&h, &w) in husbands.iter().zip(wives.iter()).take(couples) {
            people[h].add_object(citizen("isMarriedTo"), name(w));
        }
        for &m in men {
            if edge_rng.gen_bool(0.2) {
                if let Some(b) = pick_other(&mut edge_rng, men, m) {
                    people[m].add_object(citizen("hasABondOfBrotherhood"), name(b));
                }
            }
        }
        for &w in women {
            if edge_rng.gen_bool(0.3) {
                if let Some(f) = pick_other(&mut edge_rng, women, w) {
                    people[w].add_object(citizen("isFriendOf"), name(f));
                }
            }
        }
    }
    for ind in people {
        o.add_individual(ind);
    }
    Ok((o, table))
}

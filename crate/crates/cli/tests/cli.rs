use std::fs;
use std::path::{Path, PathBuf};

use owlseg::fixtures::AllocationTable;
use owlseg::rdfxml::{parse, serialize, ParseOptions};
use owlseg::Ontology;
use owlseg_cli::run_with;
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn owlseg(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("owlseg").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn error_json(o: &Outcome) -> serde_json::Value {
    let line = o.stderr.lines().last().expect("an error line");
    serde_json::from_str(line).expect("stderr is JSON")
}

fn load(p: &Path) -> Ontology {
    parse(&fs::read(p).unwrap(), ParseOptions::strict())
        .unwrap()
        .0
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

struct Env {
    dir: TempDir,
    src: PathBuf,
}

impl Env {
    fn new(n: usize) -> Self {
        let dir = tempfile::tempdir().unwrap();
        let src = dir.path().join("citizen.owl");
        let r = owlseg(&[
            "gen-fixture",
            "-o",
            s(&src),
            "--n",
            &n.to_string(),
            "--cities",
            "4",
            "--countries",
            "2",
            "--seed",
            "42",
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        Env { dir, src }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

#[test]
fn gen_fixture_writes_owl_and_allocation() {
    let env = Env::new(100);
    let table = AllocationTable::parse(&fs::read_to_string(env.path("citizen.owl.alloc")).unwrap())
        .unwrap();
    assert_eq!(table.individuals, 100);
    assert_eq!(table.cities.iter().map(|c| c.persons).sum::<usize>(), 100);
    let r = owlseg(&["validate", s(&env.src)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("valid\nclasses=10 "));
}

#[test]
fn hseg_true_keeps_everyone() {
    let env = Env::new(80);
    let out = env.path("seg.owl");
    let r = owlseg(&["hseg", s(&env.src), "-o", s(&out), "--filter", "true"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(
        load(&out).individuals().len(),
        load(&env.src).individuals().len()
    );
    assert!(r.stdout.contains("reduction_ratio=1"));
}

#[test]
fn vseg_school_schema() {
    let env = Env::new(50);
    let out = env.path("school.owl");
    let r = owlseg(&[
        "vseg",
        s(&env.src),
        "-o",
        s(&out),
        "--keep-classes",
        "Person,Man,Woman,City,Country,Email",
        "--keep-dprops",
        "lastName,firstName,dateOfBirth,personAddress",
        "--keep-oprops",
        ":hasAsFather,hasAsMother,livesIn,hasEmail",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let seg = load(&out);
    let classes: Vec<&str> = seg.classes().iter().map(|c| c.id.local_name()).collect();
    assert_eq!(
        classes,
        ["City", "Country", "Email", "Man", "Person", "Woman"]
    );
    let person = owlseg::fixtures::citizen("Person");
    let mut props: Vec<&str> = seg
        .properties_of(&person)
        .into_iter()
        .map(|p| p.local_name())
        .collect();
    props.sort();
    assert_eq!(
        props,
        [
            "dateOfBirth",
            "firstName",
            "hasAsFather",
            "hasAsMother",
            "hasEmail",
            "lastName",
            "livesIn",
            "personAddress"
        ]
    );
}

#[test]
fn merge_property_partition_is_byte_equal() {
    let env = Env::new(120);
    let src = load(&env.src);
    let (a, b) = (env.path("a.owl"), env.path("b.owl"));
    let dprops: Vec<&str> = src
        .datatype_properties()
        .iter()
        .map(|p| p.id.local_name())
        .collect();
    let oprops: Vec<&str> = src
        .object_properties()
        .iter()
        .map(|p| p.id.local_name())
        .collect();
    let (d1, d2) = dprops.split_at(dprops.len() / 2);
    let (o1, o2) = oprops.split_at(oprops.len() / 2);
    for (out, d, o) in [(&a, d1, o1), (&b, d2, o2)] {
        let r = owlseg(&[
            "vseg",
            s(&env.src),
            "-o",
            s(out),
            "--keep-dprops",
            &d.join(","),
            "--keep-oprops",
            &o.join(","),
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
    }
    let whole = env.path("whole.owl");
    let r = owlseg(&["merge", s(&a), s(&b), "-o", s(&whole)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(fs::read(&whole).unwrap(), serialize(&src));
}

#[test]
fn hybrid_with_filter() {
    let env = Env::new(200);
    let out = env.path("young.owl");
    let r = owlseg(&[
        "hybrid",
        s(&env.src),
        "-o",
        s(&out),
        "--keep-classes",
        "Person,Man,Woman,City,Country,Email",
        "--keep-dprops",
        "firstName,dateOfBirth",
        "--keep-oprops",
        "livesIn",
        "--filter",
        "dateOfBirth >= '01/01/1997'",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let seg = load(&out);
    assert!(seg.validate().is_valid());
    assert!(!seg.individuals().is_empty());
}

#[test]
fn outputs_are_deterministic() {
    let env = Env::new(150);
    let again = env.path("again.owl");
    owlseg(&[
        "gen-fixture",
        "-o",
        s(&again),
        "--n",
        "150",
        "--cities",
        "4",
        "--countries",
        "2",
        "--seed",
        "42",
    ]);
    assert_eq!(fs::read(&env.src).unwrap(), fs::read(&again).unwrap());
    let (x, y) = (env.path("x.owl"), env.path("y.owl"));
    let f = "livesIn/isLocatedIn = :Country1";
    let rx = owlseg(&["hseg", s(&env.src), "-o", s(&x), "--filter", f]);
    let ry = owlseg(&["hseg", s(&env.src), "-o", s(&y), "--filter", f]);
    assert_eq!(fs::read(&x).unwrap(), fs::read(&y).unwrap());
    assert_eq!(rx.stdout, ry.stdout);
}

#[test]
fn stats_with_reference() {
    let env = Env::new(40);
    let r = owlseg(&["stats", s(&env.src), "--ref", s(&env.src)]);
    assert_eq!(r.code, 0);
    let keys: Vec<&str> = r
        .stdout
        .lines()
        .map(|l| l.split('=').next().unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "classes",
            "object_properties",
            "datatype_properties",
            "individuals",
            "assertions",
            "bytes",
            "instance_bytes",
            "reduction_ratio",
            "instance_ratio"
        ]
    );
    assert!(r.stdout.contains("reduction_ratio=1\n"));
}

#[test]
fn exit_codes() {
    let env = Env::new(30);
    let out = env.path("o.owl");

    let r = owlseg(&["hseg", s(&env.src)]);
    assert_eq!(r.code, 1);
    assert_eq!(error_json(&r)["error"], "usage");

    let r = owlseg(&["hseg", s(&env.src), "-o", s(&env.src), "--filter", "true"]);
    assert_eq!(r.code, 1);

    let r = owlseg(&["vseg", s(&env.src), "-o", s(&out)]);
    assert_eq!(r.code, 1);

    let missing = env.path("missing.owl");
    let r = owlseg(&["validate", s(&missing)]);
    assert_eq!(r.code, 2);
    assert_eq!(error_json(&r)["error"], "io");

    let bad = env.path("bad.owl");
    fs::write(
        &bad,
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n<oops>",
    )
    .unwrap();
    let r = owlseg(&["validate", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(error_json(&r)["line"].is_number());

    let r = owlseg(&[
        "vseg",
        s(&env.src),
        "-o",
        s(&out),
        "--keep-classes",
        "Planet",
    ]);
    assert_eq!(r.code, 2);
    assert_eq!(error_json(&r)["error"], "unknown-name");

    let r = owlseg(&["hseg", s(&env.src), "-o", s(&out), "--filter", "livesIn = "]);
    assert_eq!(r.code, 3);
    let r = owlseg(&[
        "hseg",
        s(&env.src),
        "-o",
        s(&out),
        "--filter",
        "salary > '3'",
    ]);
    assert_eq!(r.code, 3);
    assert_eq!(error_json(&r)["error"], "unknown-property");

    let r = owlseg(&[
        "hybrid",
        s(&env.src),
        "-o",
        s(&out),
        "--keep-classes",
        "Person,City",
        "--keep-oprops",
        "livesIn",
        "--keep-dprops",
        "firstName",
        "--filter",
        "dateOfBirth < '1975-01-01'",
    ]);
    assert_eq!(r.code, 3);
    assert!(!out.exists());
}

#[test]
fn merge_conflict_exits_4() {
    let env = Env::new(10);
    let text = fs::read_to_string(&env.src).unwrap();
    let other = env.path("other.owl");
    let changed = text.replacen(
        "<rdfs:range rdf:resource=\"http://example.org/citizen#City\"/>",
        "<rdfs:range rdf:resource=\"http://example.org/citizen#Country\"/>",
        1,
    );
    assert_ne!(changed, text);
    fs::write(&other, changed).unwrap();
    let r = owlseg(&["merge", s(&env.src), s(&other), "-o", s(&env.path("m.owl"))]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    let j = error_json(&r);
    assert_eq!(j["error"], "merge-conflict");
    assert_eq!(j["conflicts"][0]["kind"], "object-property");
}

#[test]
fn lenient_mode_warns_and_continues() {
    let env = Env::new(5);
    let text = fs::read_to_string(&env.src).unwrap();
    let extra = text.replacen(
        "  <owl:Class",
        "  <owl:AnnotationProperty rdf:about=\"http://example.org/citizen#note\"/>\n  <owl:Class",
        1,
    );
    let file = env.path("extra.owl");
    fs::write(&file, extra).unwrap();
    assert_eq!(owlseg(&["validate", s(&file)]).code, 2);
    let r = owlseg(&["--mode", "lenient", "validate", s(&file)]);
    assert_eq!(r.code, 0);
    let w: serde_json::Value = serde_json::from_str(r.stderr.lines().next().unwrap()).unwrap();
    assert_eq!(w["warning"], "dropped");
}

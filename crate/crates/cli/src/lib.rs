//! The `owlseg` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse or validation failure,
//! 3 filter error, 4 merge conflict. Every failure writes one JSON object
//! on one line to standard error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use owlseg::assembly::{merge, stats, MergeError};
use owlseg::filter::{parse_filter, FilterExpr};
use owlseg::fixtures::{build_citizen_schema, generate_population, PopulationParams};
use owlseg::model::PropertyKind;
use owlseg::rdfxml::{parse, serialize, ParseMode, ParseOptions};
use owlseg::segment::{segment, BridgePolicy, PurgeReport, SegmentError, SegmentSpec};
use owlseg::{Iri, Ontology};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_FILTER: i32 = 3;
pub const EXIT_CONFLICT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "owlseg",
    version,
    about = "Segment, merge and inspect OWL ontologies"
)]
struct Cli {
    /// How to treat unsupported RDF/XML constructs.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Strict)]
    mode: Mode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Lenient,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Bridge {
    Stub,
    Drop,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate an ontology.
    Validate { input: PathBuf },
    /// Keep the individuals matching a filter.
    Hseg {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        filter: String,
    },
    /// Project onto chosen classes and/or properties.
    Vseg {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        keep: KeepArgs,
    },
    /// Class projection, then property projection, then an optional filter.
    Hybrid {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        keep: KeepArgs,
        #[arg(long)]
        filter: Option<String>,
    },
    /// Reassemble segments.
    Merge {
        #[arg(required = true, num_args = 1..)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print counts and sizes, optionally against a reference ontology.
    Stats {
        input: PathBuf,
        #[arg(long = "ref")]
        reference: Option<PathBuf>,
    },
    /// Write a seeded citizen population and its allocation table (`<out>.alloc`).
    GenFixture {
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cities: usize,
        #[arg(long)]
        countries: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct KeepArgs {
    /// Comma-separated class names.
    #[arg(long, value_delimiter = ',')]
    keep_classes: Option<Vec<String>>,
    /// Comma-separated datatype property names.
    #[arg(long, value_delimiter = ',')]
    keep_dprops: Option<Vec<String>>,
    /// Comma-separated object property names.
    #[arg(long, value_delimiter = ',')]
    keep_oprops: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Bridge::Stub)]
    bridge: Bridge,
}

/// A failure already mapped to its exit code.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    extra: serde_json::Value,
}

impl Failure {
    fn new(code: i32, kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            kind,
            message: message.into(),
            extra: serde_json::Value::Null,
        }
    }

    fn with(mut self, extra: serde_json::Value) -> Self {
        self.extra = extra;
        self
    }

    fn to_json(&self) -> String {
        let mut v = json!({
            "error": self.kind,
            "exit": self.code,
            "message": self.message,
        });
        if let serde_json::Value::Object(extra) = &self.extra {
            v.as_object_mut().unwrap().extend(extra.clone());
        }
        v.to_string()
    }
}

type Outcome = Result<(), Failure>;

struct Ctx<'a> {
    opts: ParseOptions,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn say(&mut self, line: &str) {
        let _ = writeln!(self.out, "{line}");
    }

    fn load(&mut self, path: &Path) -> Result<Ontology, Failure> {
        let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
        let (o, warnings) = parse(&bytes, self.opts).map_err(|e| {
            Failure::new(EXIT_INVALID, e.kind.as_str(), e.message.clone()).with(json!({
                "file": path.display().to_string(),
                "line": e.position.line,
                "column": e.position.column,
            }))
        })?;
        for w in warnings {
            let line = json!({
                "warning": w.action,
                "construct": w.construct,
                "file": path.display().to_string(),
                "line": w.position.line,
                "column": w.position.column,
            });
            let _ = writeln!(self.err, "{line}");
        }
        Ok(o)
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new(EXIT_INVALID, "io", format!("{}: {e}", path.display()))
}

fn write_output(path: &Path, o: &Ontology) -> Outcome {
    fs::write(path, serialize(o)).map_err(|e| io_failure(path, e))
}

fn same_file(a: &Path, b: &Path) -> bool {
    match (fs::canonicalize(a), fs::canonicalize(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => a == b,
    }
}

fn distinct_output(inputs: &[&PathBuf], output: &Path) -> Outcome {
    if inputs.iter().any(|i| same_file(i, output)) {
        return Err(Failure::new(
            EXIT_USAGE,
            "usage",
            format!("output {} would overwrite an input", output.display()),
        ));
    }
    Ok(())
}

fn filter_failure(e: impl ToString) -> Failure {
    Failure::new(EXIT_FILTER, "filter", e.to_string())
}

fn segment_failure(e: SegmentError) -> Failure {
    match e {
        SegmentError::Filter(e) => Failure::new(EXIT_FILTER, e.kind.as_str(), e.detail),
        SegmentError::EmptySpec | SegmentError::InvalidSpec(_) => {
            Failure::new(EXIT_USAGE, "usage", e.to_string())
        }
        e => Failure::new(EXIT_INVALID, "unknown-name", e.to_string()),
    }
}

#[derive(Clone, Copy)]
enum NameKind {
    Class,
    Property(PropertyKind),
}

/// Resolves a keep-list entry: `<iri>`, `prefix:local`, or a bare local
/// name that is declared in the default namespace or matches exactly one
/// declared local name.
fn resolve_name(o: &Ontology, name: &str, kind: NameKind) -> Result<Iri, Failure> {
    let declared: Vec<&Iri> = match kind {
        NameKind::Class => o.classes().iter().map(|c| &c.id).collect(),
        NameKind::Property(PropertyKind::Object) => {
            o.object_properties().iter().map(|p| &p.id).collect()
        }
        NameKind::Property(PropertyKind::Datatype) => {
            o.datatype_properties().iter().map(|p| &p.id).collect()
        }
    };
    let unknown = |msg: String| Failure::new(EXIT_INVALID, "unknown-name", msg);
    let name = name.trim();
    let candidate = if let Some(iri) = name.strip_prefix('<').and_then(|n| n.strip_suffix('>')) {
        Some(Iri::new(iri).map_err(|e| unknown(e.to_string()))?)
    } else if let Some((prefix, local)) = name.split_once(':') {
        Some(
            o.namespaces()
                .expand(prefix, local)
                .ok_or_else(|| unknown(format!("cannot expand `{name}`")))?,
        )
    } else {
        None
    };
    if let Some(iri) = candidate {
        return if declared.contains(&&iri) {
            Ok(iri)
        } else {
            Err(unknown(format!("`{name}` is not declared")))
        };
    }
    if let Some(iri) = o.namespaces().expand("", name) {
        if declared.contains(&&iri) {
            return Ok(iri);
        }
    }
    let matches: Vec<&&Iri> = declared.iter().filter(|i| i.local_name() == name).collect();
    match matches.as_slice() {
        [one] => Ok((**one).clone()),
        [] => Err(unknown(format!("`{name}` is not declared"))),
        _ => Err(unknown(format!("`{name}` is ambiguous"))),
    }
}

fn resolve_list(
    o: &Ontology,
    names: &Option<Vec<String>>,
    kind: NameKind,
) -> Result<Option<BTreeSet<Iri>>, Failure> {
    names
        .as_ref()
        .map(|list| {
            list.iter()
                .filter(|n| !n.trim().is_empty())
                .map(|n| resolve_name(o, n, kind))
                .collect()
        })
        .transpose()
}

fn build_spec(
    o: &Ontology,
    keep: &KeepArgs,
    filter: Option<FilterExpr>,
) -> Result<SegmentSpec, Failure> {
    Ok(SegmentSpec {
        keep_classes: resolve_list(o, &keep.keep_classes, NameKind::Class)?,
        keep_object_properties: resolve_list(
            o,
            &keep.keep_oprops,
            NameKind::Property(PropertyKind::Object),
        )?,
        keep_datatype_properties: resolve_list(
            o,
            &keep.keep_dprops,
            NameKind::Property(PropertyKind::Datatype),
        )?,
        filter,
        bridge_policy: match keep.bridge {
            Bridge::Stub => BridgePolicy::Stub,
            Bridge::Drop => BridgePolicy::Drop,
        },
    })
}

fn report(ctx: &mut Ctx, purge: &PurgeReport, seg: &Ontology, src: &Ontology) {
    ctx.say(&purge.summary());
    ctx.say(&stats(seg, Some(src)).to_line());
}

fn run_segment(
    ctx: &mut Ctx,
    input: &PathBuf,
    output: &Path,
    spec: impl FnOnce(&Ontology) -> Result<SegmentSpec, Failure>,
) -> Outcome {
    distinct_output(&[input], output)?;
    let src = ctx.load(input)?;
    let spec = spec(&src)?;
    let (seg, purge) = segment(&src, &spec).map_err(segment_failure)?;
    write_output(output, &seg)?;
    report(ctx, &purge, &seg, &src);
    Ok(())
}

fn execute(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Validate { input } => {
            let o = ctx.load(&input)?;
            ctx.say("valid");
            ctx.say(&stats(&o, None).to_line());
            Ok(())
        }
        Command::Hseg {
            input,
            output,
            filter,
        } => run_segment(ctx, &input, &output, |src| {
            Ok(SegmentSpec {
                filter: Some(parse_filter(&filter, src.namespaces()).map_err(filter_failure)?),
                ..SegmentSpec::default()
            })
        }),
        Command::Vseg {
            input,
            output,
            keep,
        } => {
            if keep.keep_classes.is_none()
                && keep.keep_dprops.is_none()
                && keep.keep_oprops.is_none()
            {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "usage",
                    "vseg needs --keep-classes, --keep-dprops or --keep-oprops",
                ));
            }
            run_segment(ctx, &input, &output, |src| build_spec(src, &keep, None))
        }
        Command::Hybrid {
            input,
            output,
            keep,
            filter,
        } => {
            if keep.keep_classes.is_none()
                || (keep.keep_dprops.is_none() && keep.keep_oprops.is_none())
            {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "usage",
                    "hybrid needs --keep-classes and --keep-dprops and/or --keep-oprops",
                ));
            }
            run_segment(ctx, &input, &output, |src| {
                let f = filter
                    .as_deref()
                    .map(|t| parse_filter(t, src.namespaces()))
                    .transpose()
                    .map_err(filter_failure)?;
                build_spec(src, &keep, f)
            })
        }
        Command::Merge { inputs, output } => {
            distinct_output(&inputs.iter().collect::<Vec<_>>(), &output)?;
            let segments = inputs
                .iter()
                .map(|p| ctx.load(p))
                .collect::<Result<Vec<_>, _>>()?;
            let whole = merge(&segments).map_err(|e| match e {
                MergeError::Conflicts(ref c) => {
                    let list: Vec<_> = c
                        .iter()
                        .map(|c| json!({"kind": c.kind.as_str(), "iri": c.iri.as_str(), "detail": c.detail}))
                        .collect();
                    Failure::new(EXIT_CONFLICT, "merge-conflict", e.to_string())
                        .with(json!({ "conflicts": list }))
                }
                MergeError::Empty => Failure::new(EXIT_USAGE, "usage", e.to_string()),
            })?;
            write_output(&output, &whole)?;
            ctx.say(&stats(&whole, None).to_line());
            Ok(())
        }
        Command::Stats { input, reference } => {
            let o = ctx.load(&input)?;
            let r = reference.map(|p| ctx.load(&p)).transpose()?;
            let text = stats(&o, r.as_ref()).to_key_values();
            let _ = write!(ctx.out, "{text}");
            Ok(())
        }
        Command::GenFixture {
            output,
            n,
            cities,
            countries,
            seed,
        } => {
            let params = PopulationParams::new(n, cities, countries, seed);
            let (o, table) = generate_population(&build_citizen_schema(), &params)
                .map_err(|e| Failure::new(EXIT_USAGE, "usage", e.to_string()))?;
            write_output(&output, &o)?;
            let mut alloc = output.clone().into_os_string();
            alloc.push(".alloc");
            let alloc = PathBuf::from(alloc);
            fs::write(&alloc, table.to_string()).map_err(|e| io_failure(&alloc, e))?;
            ctx.say(&stats(&o, None).to_line());
            Ok(())
        }
    }
}

/// Runs one invocation, writing reports to `out` and errors to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("usage error")
                .trim_start_matches("error: ");
            let f = Failure::new(EXIT_USAGE, "usage", first);
            let _ = writeln!(err, "{}", f.to_json());
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx {
        opts: ParseOptions {
            mode: match cli.mode {
                Mode::Strict => ParseMode::Strict,
                Mode::Lenient => ParseMode::Lenient,
            },
        },
        out,
        err,
    };
    match execute(&mut ctx, cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(ctx.err, "{}", f.to_json());
            f.code
        }
    }
}

/// Runs one invocation against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

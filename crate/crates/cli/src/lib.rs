//! The `mperl` command line, kept in a library so it can be driven
//! in-process by tests.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mperl_core::homology::{HomologyModel, ProjectiveKind};
use mperl_core::lefschetz::{parse_periodic_data, verify_zeta_series, SeriesReport};
use mperl_core::mperl::{best_representation, exact_forced_sets, forced_alternatives_escalating};
use mperl_core::tables::{render_markdown, rendered_rows};
use mperl_core::{
    default_bound, format_factored, forced_alternatives, minimal_lefschetz_periods,
    parse_zeta_expression, validate_model, verify_series_identity, zeta_from_homology,
    zeta_from_periodic_data, CycloVector, Error, ManifoldSpec, MPerResult,
};
use serde_json::json;

/// Exit code for invalid input: bad flags, unreadable files, models that
/// are not quasi-unipotent, unparsable or unrepresentable expressions.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for a period bound that is too small or too large.
pub const EXIT_BOUND: i32 = 3;
/// Exit code when a series check ran and found a mismatch.
pub const EXIT_MISMATCH: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "mperl",
    version,
    about = "Lefschetz zeta functions and minimal sets of Lefschetz periods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal Lefschetz periods of a map on a catalog manifold.
    Classify {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        params: Params,
        /// Period bound P [default: twice the largest cyclotomic index].
        #[arg(long = "max-period", value_name = "P")]
        max_period: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The Lefschetz zeta function of the input.
    Zeta {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal Lefschetz periods of the input.
    Mper {
        #[command(flatten)]
        input: Input,
        /// Period bound P [default: twice the largest cyclotomic index].
        #[arg(long = "max-period", value_name = "P")]
        max_period: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal forced-period families of the input.
    Alternatives {
        #[command(flatten)]
        input: Input,
        /// Period bound P [default: twice the largest cyclotomic index].
        #[arg(long = "max-period", value_name = "P")]
        max_period: Option<u64>,
        /// Also list every exact forced set, minimal or not (bound ≤ 16).
        #[arg(long)]
        unpruned: bool,
        /// Double the bound up to this ceiling until the families settle.
        #[arg(long = "escalate-to", value_name = "CEILING")]
        escalate_to: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check log ζ against L(f^m)/m up to a given order.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long = "series-order", value_name = "M", default_value_t = 20)]
        series_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the zeta-function tables for products of two spheres.
    ReproduceTables {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Sphere,
    Product,
    Cp,
    Hp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
struct Params {
    /// Dimension (the larger sphere for product; n of CP^n or HP^n).
    #[arg(long)]
    n: Option<u32>,
    /// Dimension of the first sphere of a product.
    #[arg(long)]
    m: Option<u32>,
    /// Degree of the map (±1); on CP^n and HP^n, its action on the generator of H_2 or H_4.
    #[arg(long, allow_hyphen_values = true)]
    degree: Option<i64>,
    /// Action on H_m of a product (±1).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    /// Action on H_n of a product (±1).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
struct Input {
    /// A catalog manifold, parameterized by --n, --m, --degree, --a, --b.
    #[arg(long, value_enum)]
    manifold: Option<Kind>,
    /// JSON homology model: {"dim", "groups", "maps"}.
    #[arg(long, value_name = "FILE")]
    homology: Option<String>,
    /// JSON periodic data: [{"p", "u", "delta"}, ...].
    #[arg(long = "periodic-data", value_name = "FILE")]
    periodic_data: Option<String>,
    /// A product of factors (1 ± t^p)^k, e.g. "(1+t)^2/(1-t)^2".
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    zeta: Option<String>,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(Error::BoundTooSmall { .. } | Error::BoundTooLarge { .. }) => EXIT_BOUND,
            _ => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Invalid(s) => s.clone(),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Text for standard output plus the exit code.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: Kind) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| {
        let name = kind.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default();
        Failure::Invalid(format!("{name} needs --{flag}"))
    })
}

fn manifold_spec(kind: Kind, p: &Params) -> std::result::Result<ManifoldSpec, Failure> {
    Ok(match kind {
        Kind::Sphere => ManifoldSpec::Sphere {
            n: need(p.n, "n", kind)?,
            degree: need(p.degree, "degree", kind)?,
        },
        Kind::Product => ManifoldSpec::ProductOfSpheres {
            m: need(p.m, "m", kind)?,
            n: need(p.n, "n", kind)?,
            a: need(p.a, "a", kind)?,
            b: need(p.b, "b", kind)?,
        },
        Kind::Cp | Kind::Hp => ManifoldSpec::Projective {
            kind: if kind == Kind::Cp {
                ProjectiveKind::Complex
            } else {
                ProjectiveKind::Quaternion
            },
            n: need(p.n, "n", kind)?,
            degree: need(p.degree, "degree", kind)?,
        },
    })
}

fn read_file(path: &str) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {path}: {e}")))
}

/// What an input resolves to: a homology model when there is one.
enum Source {
    Model(HomologyModel),
    Zeta(CycloVector),
}

impl Source {
    fn load(input: &Input) -> std::result::Result<Self, Failure> {
        let given = [
            input.manifold.is_some(),
            input.homology.is_some(),
            input.periodic_data.is_some(),
            input.zeta.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Failure::Invalid(
                "give exactly one of --manifold, --homology, --periodic-data, --zeta".into(),
            ));
        }
        let p = &input.params;
        let has_params = p.n.is_some() || p.m.is_some() || p.degree.is_some() || p.a.is_some() || p.b.is_some();
        if has_params && input.manifold.is_none() {
            return Err(Failure::Invalid(
                "--n, --m, --degree, --a and --b only apply with --manifold".into(),
            ));
        }
        if let Some(kind) = input.manifold {
            return Ok(Source::Model(manifold_spec(kind, &input.params)?.model()?));
        }
        if let Some(path) = &input.homology {
            return Ok(Source::Model(HomologyModel::from_json(&read_file(path)?)?));
        }
        if let Some(path) = &input.periodic_data {
            let data = parse_periodic_data(&read_file(path)?)?;
            return Ok(Source::Zeta(zeta_from_periodic_data(&data)));
        }
        let text = input.zeta.as_deref().expect("one source was checked above");
        Ok(Source::Zeta(parse_zeta_expression(text)?))
    }

    fn zeta(&self) -> std::result::Result<CycloVector, Failure> {
        match self {
            Source::Model(m) => Ok(zeta_from_homology(m)?),
            Source::Zeta(z) => Ok(z.clone()),
        }
    }
}

fn format_set(s: &BTreeSet<u64>) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn format_families(families: &[BTreeSet<u64>]) -> String {
    if families.is_empty() {
        return "-".into();
    }
    families.iter().map(format_set).collect::<Vec<_>>().join(" or ")
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn shortest_form(zeta: &CycloVector, bound: u64) -> String {
    best_representation(zeta, &(1..=bound).collect())
        .map(|r| r.to_string())
        .unwrap_or_else(|| format_factored(zeta))
}

fn mper_report(r: &MPerResult, format: Format) -> Report {
    if format == Format::Json {
        return Report::ok(pretty(&r.to_json()));
    }
    let mut out = String::new();
    writeln!(out, "zeta          {}", shortest_form(&r.zeta, r.bound)).unwrap();
    writeln!(out, "cyclotomic    {}", r.zeta).unwrap();
    writeln!(out, "period bound  {}", r.bound).unwrap();
    writeln!(out, "MPer_L        {}", format_set(&r.periods)).unwrap();
    writeln!(out, "status        {}", r.status).unwrap();
    for (i, w) in r.witnesses.iter().enumerate() {
        let label = if i == 0 { "witnesses" } else { "" };
        writeln!(out, "{label:<13} {w}   forces {}", format_set(&w.forced_periods())).unwrap();
    }
    writeln!(out, "alternatives  {}", format_families(&r.alternatives)).unwrap();
    Report::ok(out)
}

fn zeta_report(zeta: &CycloVector, format: Format) -> Report {
    let factored = shortest_form(zeta, default_bound(zeta));
    if format == Format::Json {
        return Report::ok(pretty(&json!({
            "zeta": zeta.to_string(),
            "expression": factored,
            "degree": zeta.total_degree(),
        })));
    }
    Report::ok(format!(
        "zeta          {factored}\ncyclotomic    {zeta}\ndegree        {}\n",
        zeta.total_degree()
    ))
}

fn series_report(report: &SeriesReport, format: Format) -> Report {
    let code = if report.passed { 0 } else { EXIT_MISMATCH };
    if format == Format::Json {
        let v = serde_json::to_value(report).expect("report serializes");
        return Report { text: pretty(&v), code };
    }
    let mut out = String::new();
    let verdict = if report.passed { "pass" } else { "FAIL" };
    writeln!(out, "series identity to order {}: {verdict}", report.order).unwrap();
    if !report.lefschetz_numbers.is_empty() {
        writeln!(out, "L(f^m), m = 1..{}: {}", report.order, report.lefschetz_numbers.join(" ")).unwrap();
    }
    if let Some(m) = &report.first_mismatch {
        writeln!(out, "first mismatch at m = {}: expected {}, found {}", m.m, m.expected, m.found).unwrap();
    }
    Report { text: out, code }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Classify {
            kind,
            params,
            max_period,
            format,
        } => {
            let zeta = zeta_from_homology(&manifold_spec(kind, &params)?.model()?)?;
            let bound = max_period.unwrap_or_else(|| default_bound(&zeta));
            Ok(mper_report(&minimal_lefschetz_periods(&zeta, bound)?, format))
        }
        Command::Zeta { input, format } => Ok(zeta_report(&Source::load(&input)?.zeta()?, format)),
        Command::Mper {
            input,
            max_period,
            format,
        } => {
            let zeta = Source::load(&input)?.zeta()?;
            let bound = max_period.unwrap_or_else(|| default_bound(&zeta));
            Ok(mper_report(&minimal_lefschetz_periods(&zeta, bound)?, format))
        }
        Command::Alternatives {
            input,
            max_period,
            unpruned,
            escalate_to,
            format,
        } => {
            let zeta = Source::load(&input)?.zeta()?;
            let bound = max_period.unwrap_or_else(|| default_bound(&zeta));
            let alt = match escalate_to {
                Some(ceiling) => forced_alternatives_escalating(&zeta, bound, ceiling)?,
                None => forced_alternatives(&zeta, bound)?,
            };
            let raw = if unpruned {
                Some(exact_forced_sets(&zeta, alt.bound)?)
            } else {
                None
            };
            if format == Format::Json {
                let mut v = json!({
                    "zeta": zeta.to_string(),
                    "bound": alt.bound,
                    "families": alt.families,
                });
                if let Some(raw) = raw {
                    v["unpruned"] = json!(raw);
                }
                return Ok(Report::ok(pretty(&v)));
            }
            let mut out = String::new();
            writeln!(out, "zeta          {}", shortest_form(&zeta, alt.bound)).unwrap();
            writeln!(out, "period bound  {}", alt.bound).unwrap();
            writeln!(out, "families      {}", format_families(&alt.families)).unwrap();
            if let Some(raw) = raw {
                writeln!(out, "unpruned      {}", format_families(&raw)).unwrap();
            }
            Ok(Report::ok(out))
        }
        Command::Verify {
            input,
            series_order,
            format,
        } => {
            if series_order == 0 {
                return Err(Failure::Invalid("--series-order must be at least 1".into()));
            }
            let report = match Source::load(&input)? {
                Source::Model(model) => verify_series_identity(&validate_model(model)?, series_order),
                Source::Zeta(zeta) => verify_zeta_series(&zeta, series_order),
            };
            Ok(series_report(&report, format))
        }
        Command::ReproduceTables { format } => Ok(Report::ok(match format {
            Format::Table => render_markdown()?,
            Format::Json => pretty(&serde_json::to_value(rendered_rows()?).expect("rows serialize")),
        })),
    }
}

/// Runs the command line and returns the exit code. The report goes to
/// `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.text.as_bytes());
            report.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.exit_code()
        }
    }
}

//! Command-line front end for `wptwist`.
//!
//! Every command prints one JSON document (or CSV with `--format csv`) on
//! stdout. Exit codes: 0 on success, 2 on invalid input, 3 when an internal
//! invariant is violated.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use wptwist::euler_hodge::{ci_curve_genus, conifold_transition, geometric_genus, orbifold_euler, ConifoldData, HodgePair};
use wptwist::fibration::{classify_elliptic_fibers, fibration_euler};
use wptwist::io::{hypersurface_from_json, terms_json, HypersurfaceJson};
use wptwist::resolve::{cone_lattice_points, hj_expand, CyclicSingularity};
use wptwist::search::{enumerate_cy3_elliptic, enumerate_cy3_k3fibered, enumerate_k3, SearchBounds, TableRow};
use wptwist::twist::{cy_conditions, twist, CyReport, TwistInput};
use wptwist::wps::{join, normalize, WeightSystem, WeightedHypersurface};
use wptwist::Error;

#[derive(Parser)]
#[command(name = "wptwist", version, about = "Twist maps of weighted projective hypersurfaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Range of the distinguished weight w0 for `enumerate`: `MAX` or `MIN..MAX`.
    #[arg(long, global = true)]
    bounds: Option<Bounds>,
    /// Accepted for compatibility; output never depends on a seed or on thread scheduling.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    min: u64,
    max: u64,
}

impl std::str::FromStr for Bounds {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (min, max) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => parse(s).map(|max| (max.min(2), max))?,
        };
        if min > max {
            return Err(format!("empty range {min}..{max}"));
        }
        Ok(Bounds { min, max })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a weight system (and optionally a polynomial) to normalized form.
    Normalize(NormalizeArgs),
    /// Build twist images or check Calabi-Yau conditions.
    #[command(subcommand)]
    Twist(TwistCommand),
    /// Calabi-Yau conditions of a hypersurface given as JSON.
    CheckCy(FileArg),
    /// Fiber classification and fibration Euler numbers.
    #[command(subcommand)]
    Fib(FibCommand),
    /// Singular fibers of `(C × E)/μ_ℓ → C/μ_ℓ`.
    ClassifyFibers(ClassifyArgs),
    /// Euler numbers.
    #[command(subcommand)]
    Euler(EulerCommand),
    /// Cyclic quotient singularities.
    #[command(subcommand)]
    Resolve(ResolveCommand),
    /// Hirzebruch-Jung chain of a cyclic quotient singularity.
    ResolveHj(HjArgs),
    /// Lattice points of the toric cone of `P(w0, w1, w2)`.
    Cone(ConeArgs),
    /// Hodge numbers.
    #[command(subcommand)]
    Hodge(HodgeCommand),
    /// Hodge numbers after a conifold transition.
    Conifold(ConifoldArgs),
    /// Geometric genus of a hypersurface, or genus of a complete-intersection curve.
    Genus(GenusArgs),
    /// Enumerate twist tables.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct FileArg {
    /// Hypersurface JSON file.
    file: PathBuf,
}

#[derive(Args)]
struct NormalizeArgs {
    #[arg(long, value_delimiter = ',', required_unless_present = "input")]
    weights: Vec<u64>,
    #[arg(long, required_unless_present = "input")]
    degree: Option<u64>,
    /// Hypersurface JSON file; overrides `--weights` and `--degree`.
    #[arg(long, conflicts_with_all = ["weights", "degree"])]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TwistCommand {
    /// Twist image of `V1 × V2`.
    Build {
        #[arg(long)]
        v1: PathBuf,
        #[arg(long)]
        v2: PathBuf,
    },
    /// Calabi-Yau conditions of a hypersurface.
    CheckCy(FileArg),
}

#[derive(Subcommand)]
enum FibCommand {
    Classify(ClassifyArgs),
    /// `(e(base) - N)·e(generic) + N·e(singular)`.
    Euler {
        /// Number of singular fibers.
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        fiber_euler: i64,
        #[arg(long, default_value_t = 24)]
        generic_euler: i64,
        #[arg(long, default_value_t = 2)]
        base_euler: i64,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Base curve as hypersurface JSON.
    #[arg(long)]
    curve: PathBuf,
    /// Weights of the elliptic fiber.
    #[arg(long, value_delimiter = ',')]
    elliptic: Vec<u64>,
    #[arg(long)]
    ell: u64,
}

#[derive(Subcommand)]
enum EulerCommand {
    /// Orbifold Euler number of `P(weights)[degree]`.
    Orbifold(WeightsDegree),
}

#[derive(Args)]
struct WeightsDegree {
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u64>,
    #[arg(long)]
    degree: u64,
}

#[derive(Subcommand)]
enum ResolveCommand {
    Hj(HjArgs),
    Cone(ConeArgs),
}

#[derive(Args)]
struct HjArgs {
    #[arg(long)]
    alpha: u64,
    #[arg(long)]
    beta: u64,
}

#[derive(Args)]
struct ConeArgs {
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u64>,
}

#[derive(Subcommand)]
enum HodgeCommand {
    Conifold(ConifoldArgs),
}

#[derive(Args)]
struct ConifoldArgs {
    #[arg(long)]
    h11: u64,
    #[arg(long)]
    h21: u64,
    #[arg(long)]
    nodes: u64,
    #[arg(long)]
    relations: u64,
}

#[derive(Args)]
struct GenusArgs {
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u64>,
    /// One degree for a hypersurface, two for a curve in a weighted `P³`.
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    table: Table,
    /// Keep only fibers with these exponents.
    #[arg(long, value_delimiter = ',')]
    ell: Vec<u64>,
    /// Keep only these catalog fibers (E1, E2, E3, K1, ...).
    #[arg(long, value_delimiter = ',')]
    fiber: Vec<String>,
    /// Pure powers only in the base polynomial.
    #[arg(long)]
    fermat_only: bool,
    /// Attach Euler numbers to elliptic threefold rows.
    #[arg(long)]
    chi: bool,
    /// Include catalog fibers beyond the reference tables.
    #[arg(long)]
    extra_fibers: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    K3,
    Cy3Elliptic,
    #[value(name = "cy3-k3")]
    Cy3K3,
}

impl Table {
    fn default_max(self) -> u64 {
        match self {
            Table::K3 => 11,
            Table::Cy3Elliptic => 14,
            Table::Cy3K3 => 12,
        }
    }
}

/// Failure of a command, carrying the exit code.
#[derive(Debug)]
enum CliError {
    Core(Error),
    Input(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_internal() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(s) => f.write_str(s),
        }
    }
}

impl<E: Into<Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Core(e.into())
    }
}

type Outcome = Result<Output, CliError>;

/// A single record, or a table with fixed columns.
enum Output {
    Record(Value),
    Rows(Vec<TableRow>),
}

fn read_hypersurface(path: &Path) -> Result<WeightedHypersurface, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(hypersurface_from_json(&text)?)
}

fn weight_system(w: &[u64]) -> Result<WeightSystem, CliError> {
    Ok(WeightSystem::new(w.to_vec())?)
}

fn with_report(x: &WeightedHypersurface, report: &CyReport) -> Value {
    let mut v = serde_json::to_value(HypersurfaceJson::from(x)).expect("plain data");
    v["report"] = json!({
        "sufficient": report.sufficient,
        "fiber_cy": report.fiber_cy,
        "total_cy": report.total_cy,
        "genus": report.genus,
    });
    v
}

fn run_normalize(a: NormalizeArgs) -> Outcome {
    let (ws, d, poly) = match a.input {
        Some(p) => {
            let v = read_hypersurface(&p)?;
            let poly = wptwist::WeightedPolynomial::new(v.weights().clone(), v.degree(), v.poly().clone())?;
            (v.weights().clone(), v.degree(), Some(poly))
        }
        None => (weight_system(&a.weights)?, a.degree.expect("required by clap"), None),
    };
    let n = normalize(&ws, d, poly.as_ref())?;
    let mut out = json!({ "weights": n.weights, "degree": n.degree, "steps": n.steps });
    if let Some(p) = &n.polynomial {
        out["terms"] = serde_json::to_value(terms_json(p.poly())).expect("plain data");
    }
    Ok(Output::Record(out))
}

fn run_twist(c: TwistCommand) -> Outcome {
    match c {
        TwistCommand::Build { v1, v2 } => {
            let input = TwistInput::from_factors(read_hypersurface(&v1)?, read_hypersurface(&v2)?)?;
            let result = twist(&input)?;
            let report = cy_conditions(&result.x, Some(&input));
            Ok(Output::Record(with_report(&result.x, &report)))
        }
        TwistCommand::CheckCy(f) => run_check_cy(f),
    }
}

fn run_check_cy(f: FileArg) -> Outcome {
    let x = read_hypersurface(&f.file)?;
    Ok(Output::Record(with_report(&x, &cy_conditions(&x, None))))
}

fn run_classify(a: ClassifyArgs) -> Outcome {
    let curve = read_hypersurface(&a.curve)?;
    let report = classify_elliptic_fibers(&curve, &weight_system(&a.elliptic)?, a.ell)?;
    let fibers: Vec<Value> = report.fibers.iter().map(|(f, n)| json!({ "type": f.symbol(), "count": n })).collect();
    Ok(Output::Record(json!({
        "fibers": fibers,
        "alpha_sum": wptwist::arith::format_pq(&report.alpha_sum),
        "euler_sum": report.euler_sum,
        "chi": report.total_euler,
    })))
}

fn run_fib(c: FibCommand) -> Outcome {
    match c {
        FibCommand::Classify(a) => run_classify(a),
        FibCommand::Euler { n, fiber_euler, generic_euler, base_euler } => {
            let e = fibration_euler(n, fiber_euler, generic_euler, base_euler);
            Ok(Output::Record(json!({ "n": n, "fiber_euler": fiber_euler, "chi": e.value, "bound": e.bound })))
        }
    }
}

fn run_hj(a: HjArgs) -> Outcome {
    let s = CyclicSingularity::new(a.alpha, a.beta)?;
    let chain: Vec<i64> = hj_expand(&s).into_iter().map(|b| -(b as i64)).collect();
    Ok(Output::Record(json!({ "chain": chain })))
}

fn run_cone(a: ConeArgs) -> Outcome {
    let w: [u64; 3] = a.weights.as_slice().try_into().map_err(|_| CliError::Input("cone needs three weights".into()))?;
    weight_system(&w)?;
    Ok(Output::Record(json!({ "points": cone_lattice_points(w) })))
}

fn run_conifold(a: ConifoldArgs) -> Outcome {
    let before = HodgePair { h11: a.h11, h21: a.h21 };
    let after = conifold_transition(&ConifoldData { nodes: a.nodes, relations: a.relations, before })?;
    Ok(Output::Record(json!({
        "h11": after.h11,
        "h21": after.h21,
        "euler_before": before.euler(),
        "euler_after": after.euler(),
        "delta_chi": after.euler() - before.euler(),
    })))
}

fn run_genus(a: GenusArgs) -> Outcome {
    let ws = weight_system(&a.weights)?;
    let genus = match a.degrees.as_slice() {
        [d] => geometric_genus(&ws, *d),
        [d1, d2] => ci_curve_genus(*d1, *d2, &ws)? as u128,
        _ => return Err(CliError::Input("--degrees takes one or two values".into())),
    };
    Ok(Output::Record(json!({ "weights": ws, "degrees": a.degrees, "genus": genus })))
}

fn run_enumerate(a: EnumerateArgs, bounds: Option<Bounds>) -> Outcome {
    let b = bounds.unwrap_or(Bounds { min: 2, max: a.table.default_max() });
    let bounds = SearchBounds {
        min_w0: b.min,
        max_w0: b.max,
        ells: (!a.ell.is_empty()).then_some(a.ell),
        catalog: (!a.fiber.is_empty()).then_some(a.fiber),
        allow_chain: !a.fermat_only,
        with_chi: a.chi,
        extra_fibers: a.extra_fibers,
    };
    let rows = match a.table {
        Table::K3 => enumerate_k3(&bounds),
        Table::Cy3Elliptic => enumerate_cy3_elliptic(&bounds),
        Table::Cy3K3 => enumerate_cy3_k3fibered(&bounds),
    };
    Ok(Output::Rows(rows))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Normalize(a) => run_normalize(a),
        Command::Twist(c) => run_twist(c),
        Command::CheckCy(f) => run_check_cy(f),
        Command::Fib(c) => run_fib(c),
        Command::ClassifyFibers(a) => run_classify(a),
        Command::Euler(EulerCommand::Orbifold(a)) => {
            let chi = orbifold_euler(&weight_system(&a.weights)?, a.degree)?;
            Ok(Output::Record(json!({ "weights": a.weights, "degree": a.degree, "chi": chi })))
        }
        Command::Resolve(ResolveCommand::Hj(a)) | Command::ResolveHj(a) => run_hj(a),
        Command::Resolve(ResolveCommand::Cone(a)) | Command::Cone(a) => run_cone(a),
        Command::Hodge(HodgeCommand::Conifold(a)) | Command::Conifold(a) => run_conifold(a),
        Command::Genus(a) => run_genus(a),
        Command::Enumerate(a) => run_enumerate(a, cli.bounds),
    }
}

/// Row shape shared by the JSON and CSV renderings.
#[derive(Serialize)]
struct RowRecord {
    base_weights: String,
    fiber_weights: String,
    ell: u64,
    image_weights: String,
    degree: u64,
    chi: Option<i64>,
    fibers: Option<String>,
    reference: &'static str,
}

impl From<&TableRow> for RowRecord {
    fn from(r: &TableRow) -> Self {
        let fibers = match (&r.fibers, r.singular_fibers) {
            (Some(f), _) => Some(wptwist::fibration::format_fibers(f)),
            (None, Some(n)) => Some(n.to_string()),
            (None, None) => None,
        };
        RowRecord {
            base_weights: format!("({})", join(&r.base)),
            fiber_weights: format!("({})", join(&r.fiber)),
            ell: r.ell,
            image_weights: format!("({})", join(&r.image)),
            degree: r.degree,
            chi: r.chi,
            fibers,
            reference: if r.listed { "listed" } else { "extra" },
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(out: Output, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match (out, format) {
        (Output::Record(v), Format::Json) => writeln!(w, "{}", serde_json::to_string_pretty(&v)?),
        (Output::Rows(rows), Format::Json) => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(RowRecord::from(r)).expect("plain data");
                    v["base_polynomial"] = json!(r.base_polynomial);
                    v["fiber"] = json!(r.fiber_name);
                    v["normalized_weights"] = json!(r.normalized_image);
                    v["normalized_degree"] = json!(r.normalized_degree);
                    v
                })
                .collect();
            writeln!(w, "{}", serde_json::to_string_pretty(&values)?)
        }
        (Output::Rows(rows), Format::Csv) => {
            let mut csv = csv::Writer::from_writer(w);
            if rows.is_empty() {
                csv.write_record(["base_weights", "fiber_weights", "ell", "image_weights", "degree", "chi", "fibers", "reference"])?;
            }
            for r in &rows {
                csv.serialize(RowRecord::from(r))?;
            }
            csv.flush()
        }
        (Output::Record(v), Format::Csv) => {
            let mut csv = csv::Writer::from_writer(w);
            match v {
                Value::Object(map) => {
                    csv.write_record(map.keys())?;
                    csv.write_record(map.values().map(scalar))?;
                }
                other => csv.write_record([scalar(&other)])?,
            }
            csv.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let stdout = io::stdout();
            match emit(out, format, &mut stdout.lock()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success (valid, equal, witnessed), 1 negative mathematical
//! result, 2 usage or I/O error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{Degree, Element, GradedAlgebra};
use crate::builders::{self, BorelSign, WindowSpec};
use crate::derivation::{self, LinearMap, UnknownIndex};
use crate::error::Error;
use crate::format;
use crate::property_p::{self, SearchBudget};
use crate::rational::Rational;
use crate::report;

#[derive(Parser, Debug)]
#[command(
    name = "nderiv",
    version,
    about = "Exact N-derivations of graded Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a built-in algebra to a file.
    Builtin(BuiltinArgs),
    /// Validate an algebra file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Solve for homogeneous N-derivations.
    Solve {
        file: PathBuf,
        #[arg(long)]
        order: usize,
        /// Degree vector, comma separated; repeat for several degrees.
        #[arg(long, required = true, allow_hyphen_values = true)]
        gamma: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare solution spaces of two orders on an inner window.
    Compare {
        file: PathBuf,
        #[arg(long)]
        orders: String,
        #[arg(
            long,
            allow_hyphen_values = true,
            required_unless_present = "gamma_range",
            conflicts_with = "gamma_range"
        )]
        gamma: Vec<String>,
        /// Integer sweep `a..b` (inclusive) over a one-dimensional grading.
        #[arg(long, allow_hyphen_values = true)]
        gamma_range: Option<String>,
        /// Inner radius is the algebra radius minus this buffer
        /// (default: half the radius).
        #[arg(long)]
        buffer: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Search for witnesses of condition (P).
    Propp {
        file: PathBuf,
        #[arg(long, conflicts_with = "all_basis")]
        element: Option<String>,
        #[arg(long)]
        all_basis: bool,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Split a linear map into homogeneous components.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuiltinKind {
    Sv,
    Witt,
    Sl,
    Borel,
    #[value(name = "K", alias = "k")]
    K,
}

#[derive(Args, Debug)]
struct BuiltinArgs {
    kind: BuiltinKind,
    /// Window radius (sv: max |n|; witt: max coordinate).
    #[arg(long = "max")]
    max: Option<u64>,
    /// Witt rank.
    #[arg(long = "d")]
    d: Option<usize>,
    /// Matrix size for sl and borel.
    #[arg(long = "n")]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = ["+", "-"])]
    sign: Option<String>,
    #[arg(long)]
    no_center: bool,
    #[arg(short = 'o', long = "output", required = true)]
    output: PathBuf,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Io(m)) => {
            eprintln!("I/O error: {m}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Builtin(a) => builtin(a),
        Command::Check { file, out } => check(&file, &out),
        Command::Solve {
            file,
            order,
            gamma,
            out,
        } => solve(&file, order, &gamma, &out),
        Command::Compare {
            file,
            orders,
            gamma,
            gamma_range,
            buffer,
            out,
        } => compare(&file, &orders, &gamma, gamma_range.as_deref(), buffer, &out),
        Command::Propp {
            file,
            element,
            all_basis: _,
            samples,
            seed,
            out,
        } => propp(
            &file,
            element.as_deref(),
            SearchBudget { samples, seed },
            &out,
        ),
        Command::Decompose { file, map, out } => decompose(&file, &map, &out),
    }
}

fn read(path: &Path) -> std::result::Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> std::result::Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &Output, json: Value, text: String) -> std::result::Result<(), Failure> {
    let bytes = match out.format {
        FormatArg::Json => report::to_bytes(&json),
        FormatArg::Text => text.into_bytes(),
    };
    match &out.output {
        Some(p) => write(p, &bytes),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

/// Loads and validates; a failing validation is a negative result.
fn load(path: &Path) -> std::result::Result<Result<GradedAlgebra, i32>, Failure> {
    let bytes = read(path)?;
    match format::load(&bytes) {
        Ok(a) => Ok(Ok(a)),
        Err(Error::Validation(r)) => {
            eprintln!("{}: algebra fails validation", path.display());
            for v in &r.violations {
                eprintln!("  {v}");
            }
            Ok(Err(1))
        }
        Err(e) => Err(Failure::Usage(format!("{}: {e}", path.display()))),
    }
}

macro_rules! load_or_return {
    ($path:expr) => {
        match load($path)? {
            Ok(a) => a,
            Err(code) => return Ok(code),
        }
    };
}

fn builtin(a: BuiltinArgs) -> Outcome {
    let window = |default: u64| WindowSpec::new(a.max.unwrap_or(default));
    let alg = match a.kind {
        BuiltinKind::Sv => builders::build_sv_with(window(4)?, !a.no_center),
        BuiltinKind::Witt => builders::build_witt(a.d.unwrap_or(1), window(5)?)?,
        BuiltinKind::Sl => builders::build_sl(a.n.unwrap_or(2))?,
        BuiltinKind::Borel => {
            let sign = match a.sign.as_deref() {
                Some("-") => BorelSign::Negative,
                _ => BorelSign::Positive,
            };
            builders::build_borel(a.n.unwrap_or(3), sign)?
        }
        BuiltinKind::K => builders::build_counterexample_k(),
    };
    write(&a.output, &format::save(&alg))?;
    eprintln!(
        "wrote {} (dim {}) to {}",
        alg.name(),
        alg.dim(),
        a.output.display()
    );
    Ok(0)
}

fn check(file: &Path, out: &Output) -> Outcome {
    let bytes = read(file)?;
    let alg = format::load_unchecked(&bytes)
        .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let r = alg.validate();
    emit(
        out,
        report::validation_json(&alg, &r),
        report::validation_text(&alg, &r),
    )?;
    Ok(if r.is_valid() { 0 } else { 1 })
}

fn parse_degree(alg: &GradedAlgebra, s: &str) -> std::result::Result<Degree, Failure> {
    let comps: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|c| c.trim().parse::<i64>()).collect();
    let comps = comps.map_err(|_| Failure::Usage(format!("--gamma: cannot parse '{s}'")))?;
    if comps.len() != alg.grading_dim() {
        return Err(Failure::Usage(format!(
            "--gamma: '{s}' has {} components, algebra is graded by Z^{}",
            comps.len(),
            alg.grading_dim()
        )));
    }
    Ok(Degree::new(comps))
}

fn parse_range(alg: &GradedAlgebra, s: &str) -> std::result::Result<Vec<Degree>, Failure> {
    let bad = || Failure::Usage(format!("--gamma-range: expected a..b, got '{s}'"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    if alg.grading_dim() != 1 {
        return Err(Failure::Usage(
            "--gamma-range needs a one-dimensional grading".into(),
        ));
    }
    Ok((a..=b).map(|g| Degree::new(vec![g])).collect())
}

fn check_order(flag: &str, n: usize) -> std::result::Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage(format!(
            "{flag}: order must be at least 2, got {n}"
        )));
    }
    Ok(())
}

fn solve(file: &Path, order: usize, gammas: &[String], out: &Output) -> Outcome {
    check_order("--order", order)?;
    let alg = load_or_return!(file);
    let gammas: Vec<Degree> = gammas
        .iter()
        .map(|g| parse_degree(&alg, g))
        .collect::<Result<_, _>>()?;
    let mut json = Vec::new();
    let mut text = String::new();
    for g in &gammas {
        let sol = derivation::solve_nder(&alg, order, g)?;
        json.push(report::solution_json(&alg, &sol));
        text.push_str(&report::solution_text(&alg, &sol));
    }
    let json = if json.len() == 1 {
        json.pop().unwrap()
    } else {
        json!({"algebra": alg.name(), "reports": json})
    };
    emit(out, json, text)?;
    Ok(0)
}

fn compare(
    file: &Path,
    orders: &str,
    gammas: &[String],
    range: Option<&str>,
    buffer: Option<u64>,
    out: &Output,
) -> Outcome {
    let parsed: Vec<usize> = orders
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--orders: cannot parse '{orders}'")))?;
    let [n1, n2] = parsed[..] else {
        return Err(Failure::Usage(format!(
            "--orders: expected N1,N2, got '{orders}'"
        )));
    };
    check_order("--orders", n1)?;
    check_order("--orders", n2)?;
    let alg = load_or_return!(file);
    let radius = alg.radius();
    let buffer = buffer.unwrap_or(radius - radius / 2);
    if buffer >= radius {
        return Err(Failure::Usage(format!(
            "--buffer: {buffer} must be smaller than the algebra radius {radius}"
        )));
    }
    let inner = WindowSpec::new(radius - buffer)?;
    let gammas = match range {
        Some(r) => parse_range(&alg, r)?,
        None => gammas
            .iter()
            .map(|g| parse_degree(&alg, g))
            .collect::<Result<_, _>>()?,
    };
    let mut json = Vec::new();
    let mut text = String::new();
    let mut all_equal = true;
    for g in &gammas {
        let r = derivation::compare_orders(&alg, n1, n2, g, inner)?;
        let index = UnknownIndex::new(&alg, g);
        all_equal &= r.equal;
        json.push(report::comparison_json(&alg, &r, &index));
        text.push_str(&report::comparison_text(&alg, &r, &index));
    }
    let json = if json.len() == 1 {
        json.pop().unwrap()
    } else {
        json!({
            "algebra": alg.name(),
            "orders": [n1, n2],
            "buffer": buffer,
            "equal": all_equal,
            "reports": json,
        })
    };
    emit(out, json, text)?;
    Ok(if all_equal { 0 } else { 1 })
}

fn propp(file: &Path, element: Option<&str>, budget: SearchBudget, out: &Output) -> Outcome {
    let alg = load_or_return!(file);
    let targets: Vec<Element> = match element {
        Some(label) => {
            let i = alg
                .index_of(label)
                .ok_or_else(|| Failure::Usage(format!("--element: unknown label '{label}'")))?;
            vec![Element::basis(i)]
        }
        None => (0..alg.dim())
            .filter(|&i| {
                let d = alg.degree(i);
                !d.is_zero() && alg.is_present(&-d)
            })
            .map(Element::basis)
            .collect(),
    };
    let mut json = Vec::new();
    let mut text = String::new();
    let mut all = true;
    for x in &targets {
        let w = property_p::check_property_p(&alg, x, budget)?;
        all &= w.is_witnessed();
        json.push(report::witness_json(&alg, &w));
        text.push_str(&report::witness_text(&alg, &w));
    }
    let json = json!({
        "algebra": alg.name(),
        "samples": budget.samples,
        "seed": budget.seed,
        "witnesses": json,
    });
    emit(out, json, text)?;
    Ok(if all { 0 } else { 1 })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    images: Vec<MapImage>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapImage {
    source: String,
    value: Vec<MapTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapTerm {
    label: String,
    c: Rational,
}

fn parse_map(alg: &GradedAlgebra, path: &Path) -> std::result::Result<LinearMap, Failure> {
    let bad = |m: String| Failure::Usage(format!("{}: {m}", path.display()));
    let file: MapFile = serde_json::from_slice(&read(path)?).map_err(|e| bad(e.to_string()))?;
    let index = |l: &str| {
        alg.index_of(l)
            .ok_or_else(|| bad(format!("unknown label '{l}'")))
    };
    let mut f = BTreeMap::new();
    for img in file.images {
        let b = index(&img.source)?;
        let terms = img
            .value
            .iter()
            .map(|t| Ok((index(&t.label)?, t.c.clone())))
            .collect::<Result<Vec<_>, Failure>>()?;
        if f.insert(b, Element::from_terms(terms)).is_some() {
            return Err(bad(format!("repeated source '{}'", img.source)));
        }
    }
    f.retain(|_, v: &mut Element| !v.is_zero());
    Ok(f)
}

fn decompose(file: &Path, map: &Path, out: &Output) -> Outcome {
    let alg = load_or_return!(file);
    let f = parse_map(&alg, map)?;
    let parts = derivation::decompose_homogeneous(&alg, &f);
    emit(
        out,
        report::decomposition_json(&alg, &parts),
        report::decomposition_text(&alg, &parts),
    )?;
    Ok(0)
}

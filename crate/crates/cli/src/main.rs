//! Command-line front end: the catalog of built-in families, verification
//! runs over user or catalog inputs, and single-fiber reports.
//!
//! Exit codes: 0 = all checks pass, 1 = theorem violation, 2 = input error.

mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use liefam::catalog::{self, CatalogCase};
use liefam::familyalg::{degeneration_at, witness_isomorphism, ProjPoint, Sign};
use liefam::report::{self, Mode, REPORT_VERSION};

#[derive(Parser)]
#[command(name = "liefam", version, about = "Algebraic families of Lie algebras and groups over the projective line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in example families.
    Catalog(CatalogArgs),
    /// Run the verification suite for a catalog case or an input document.
    Verify(VerifyArgs),
    /// Report on a single fiber of the family.
    Fiber(FiberArgs),
}

#[derive(Args)]
struct CatalogArgs {
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Name of a built-in catalog case.
    case: Option<String>,
    /// Path to a JSON input document (alternative to a catalog case).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Which checks to run: algebra, group, or all.
    #[arg(long, default_value = "all")]
    mode: String,
    /// Seed for all randomized sampling.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Path to a JSON array of sample points ("a:b" strings).
    #[arg(long)]
    sample: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FiberArgs {
    /// Name of a built-in catalog case.
    case: Option<String>,
    /// Path to a JSON input document (alternative to a catalog case).
    #[arg(long)]
    input: Option<PathBuf>,
    /// The point of the projective line, as "a:b".
    #[arg(long)]
    point: String,
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog(args) => run_catalog(args),
        Command::Verify(args) => run_verify(args),
        Command::Fiber(args) => run_fiber(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Errors before any theorem gets checked: bad flags, unreadable files,
/// invalid documents. All map to exit code 2.
type InputResult<T> = Result<T, String>;

fn emit(out: &Option<PathBuf>, value: &impl Serialize) -> InputResult<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CatalogEntry {
    name: String,
    description: String,
    has_group_data: bool,
    positive_form: Option<String>,
    negative_form: Option<String>,
}

#[derive(Serialize)]
struct CatalogListing {
    version: &'static str,
    cases: Vec<CatalogEntry>,
}

fn run_catalog(args: CatalogArgs) -> InputResult<ExitCode> {
    let cases = catalog::all().map_err(|e| e.to_string())?;
    let listing = CatalogListing {
        version: REPORT_VERSION,
        cases: cases
            .into_iter()
            .map(|c| CatalogEntry {
                name: c.name,
                description: c.description,
                has_group_data: c.group.is_some(),
                positive_form: c.positive_form,
                negative_form: c.negative_form,
            })
            .collect(),
    };
    emit(&args.out, &listing)?;
    Ok(ExitCode::SUCCESS)
}

fn load_case(case: &Option<String>, input: &Option<PathBuf>) -> InputResult<CatalogCase> {
    match (case, input) {
        (Some(name), None) => catalog::build(name).map_err(|e| e.to_string()),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            input::parse_document(&text)
        }
        (Some(_), Some(_)) => Err("give either a catalog case or --input, not both".into()),
        (None, None) => Err("give a catalog case name or --input <file>".into()),
    }
}

fn load_sample(path: &Option<PathBuf>, doc_sample: Option<Vec<ProjPoint>>, seed: u64) -> InputResult<Vec<ProjPoint>> {
    if let Some(path) = path {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let strings: Vec<String> =
            serde_json::from_str(&text).map_err(|e| format!("sample file: {e}"))?;
        return strings
            .iter()
            .enumerate()
            .map(|(i, s)| s.parse().map_err(|e| format!("sample[{i}]: {e}")))
            .collect();
    }
    if let Some(points) = doc_sample {
        return Ok(points);
    }
    Ok(report::default_sample(seed, 2))
}

fn run_verify(args: VerifyArgs) -> InputResult<ExitCode> {
    let mode: Mode = args.mode.parse().map_err(|e| format!("{e}"))?;
    let (case, doc_sample) = match (&args.case, &args.input) {
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let (case, sample) = input::parse_document_with_sample(&text)?;
            (case, sample)
        }
        _ => (load_case(&args.case, &args.input)?, None),
    };
    let sample = load_sample(&args.sample, doc_sample, args.seed)?;
    let report = report::verify(&case, mode, args.seed, &sample)
        .map_err(|e| format!("verification could not run: {e}"))?;
    emit(&args.out, &report)?;
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

#[derive(Serialize)]
struct FiberReport {
    version: &'static str,
    case: String,
    point: String,
    regime: String,
    dim: usize,
    /// Fiber basis matrices, entries in exact scalar text form.
    basis: Vec<Vec<Vec<String>>>,
    /// Structure constants c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k.
    structure_constants: Vec<Vec<Vec<String>>>,
    fingerprint: liefam::liecore::Fingerprint,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed: Option<FixedFiberReport>,
}

#[derive(Serialize)]
struct FixedFiberReport {
    dim: usize,
    fingerprint: liefam::liecore::Fingerprint,
    #[serde(skip_serializing_if = "Option::is_none")]
    matched_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<liefam::familyalg::WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degeneration: Option<liefam::familyalg::DegenerationReport>,
}

fn matrix_strings(m: &liefam::exactlin::ExactMatrix) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

fn run_fiber(args: FiberArgs) -> InputResult<ExitCode> {
    let case = load_case(&args.case, &args.input)?;
    let point: ProjPoint = args.point.parse().map_err(|e| format!("--point: {e}"))?;
    let fd = &case.family;
    let fiber = fd
        .fiber_at(&point)
        .map_err(|e| format!("fiber construction: {e}"))?;
    let sc = fiber.check_closure().map_err(|e| format!("closure: {e}"))?;
    let fingerprint = fiber.fingerprint().map_err(|e| format!("fingerprint: {e}"))?;

    let mut violation = false;
    let fixed = if point.is_real() && fd.sigma().is_some() {
        let fixed_fiber = fd
            .fixed_fiber_at(&point)
            .map_err(|e| format!("fixed fiber: {e}"))?;
        let fp = fixed_fiber
            .fingerprint()
            .map_err(|e| format!("fixed fingerprint: {e}"))?;
        let matched_form = catalog::named_forms()
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|(_, form)| form.fingerprint().ok().as_ref() == Some(&fp))
            .map(|(name, _)| name.to_string());
        let (witness, degeneration) = match point.sign().map_err(|e| e.to_string())? {
            Sign::Zero => {
                let (_, rep) = degeneration_at(fd, &point).map_err(|e| e.to_string())?;
                violation |= !rep.reductive_matches;
                (None, Some(rep))
            }
            _ => {
                let w = witness_isomorphism(fd, &point).map_err(|e| e.to_string())?;
                violation |= !w.ok();
                (Some(w), None)
            }
        };
        Some(FixedFiberReport {
            dim: fixed_fiber.dim(),
            fingerprint: fp,
            matched_form,
            witness,
            degeneration,
        })
    } else {
        None
    };

    let regime = if point.is_real() {
        match point.sign().map_err(|e| e.to_string())? {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
            Sign::Zero => "zero",
        }
    } else {
        "complex"
    };
    let report = FiberReport {
        version: REPORT_VERSION,
        case: case.name.clone(),
        point: point.to_string(),
        regime: regime.into(),
        dim: fiber.dim(),
        basis: fiber.basis().iter().map(matrix_strings).collect(),
        structure_constants: sc
            .c
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|s| s.to_string()).collect())
                    .collect()
            })
            .collect(),
        fingerprint,
        fixed,
    };
    emit(&args.out, &report)?;
    Ok(if violation { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

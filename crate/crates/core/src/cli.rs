//! Command-line surface.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 identity refuted,
//! 3 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bundle_analysis::{bryan_donagi_checks, bryan_donagi_example};
use crate::catalog::{
    fixed_catalog, load_bundle, load_variety, parse_variety_spec, render_report, BundleRecord, BundleReport,
    CatalogError, Format, Report, ReportDocument, VarietyRecord,
};
use crate::sampling::{round_trip_sweep, strict_triple_sweep};
use crate::symbolic_verify::{
    sweep_parameters, verify_sweep, Claim, Fault, VerificationVerdict, VerifyError, VerifyOptions,
};
use crate::Strictness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "genus-forge", version, about = "Exact chi_y-genus computations and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Reject constraint violations (default).
    #[arg(long, global = true, conflicts_with = "lax")]
    strict: bool,
    /// Carry constraint violations along as diagnostics.
    #[arg(long, global = true)]
    lax: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// χ_y and invariants of one variety.
    Genus {
        /// Variety file (genus-forge/variety/v1).
        #[arg(long, conflicts_with = "variety", required_unless_present = "variety")]
        input: Option<PathBuf>,
        /// Built-in spec such as `curve:2`, `pn:3`, `bd:2,2`, `curve:1*pn:2`.
        #[arg(long)]
        variety: Option<String>,
    },
    /// Multiplicativity defect of a bundle.
    Bundle {
        /// Bundle file (genus-forge/bundle/v1).
        #[arg(long, conflicts_with_all = ["fiber", "base", "total"], required_unless_present_all = ["fiber", "base", "total"])]
        input: Option<PathBuf>,
        #[arg(long, requires_all = ["base", "total"])]
        fiber: Option<String>,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        total: Option<String>,
    },
    /// Run a verification claim over a parameter range.
    Verify {
        #[arg(long)]
        claim: String,
        /// Inclusive range `A..B`: dimensions, or `f + b` for bundle claims.
        #[arg(long)]
        dims: Option<String>,
        /// Samples per parameter for the sampled claims.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt the identity under test; the run must then refute it.
        #[arg(long)]
        inject_fault: bool,
        /// Largest number of mod-4 assignments to exhaust.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// The fixed catalog of built-in varieties.
    Catalog,
    /// Bryan–Donagi surface X_{g,n} read as a curve bundle.
    BryanDonagi {
        g: i64,
        n: i64,
        /// Which of the two fibrations (1 or 2).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        fibration: u8,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Io(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Parses `A..B`, `A..=B` or a single `A`.
pub fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some(a..=b)
}

fn default_range(claim: Claim) -> RangeInclusive<usize> {
    match claim {
        Claim::ClosedForm => 1..=20,
        Claim::DualityConsequences => 0..=20,
        Claim::DifferenceIdentity | Claim::StrictTriples => 2..=10,
        Claim::SignatureMod4 => 2..=8,
        Claim::RoundTrip => 1..=12,
    }
}

fn read(path: &PathBuf) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

struct Outcome {
    report: Report,
    refuted: bool,
}

fn ok(report: Report) -> Result<Outcome, Failure> {
    Ok(Outcome { report, refuted: false })
}

fn genus(input: Option<PathBuf>, variety: Option<String>, strictness: Strictness) -> Result<Outcome, Failure> {
    let record: VarietyRecord = match (input, variety) {
        (Some(path), _) => load_variety(&read(&path)?, strictness)?,
        (None, Some(spec)) => parse_variety_spec(&spec)?,
        (None, None) => return Err(Failure::Invalid("genus needs --input or --variety".into())),
    };
    ok(Report::Genus(record.genus_row()))
}

fn bundle(
    input: Option<PathBuf>,
    specs: [Option<String>; 3],
    strictness: Strictness,
) -> Result<Outcome, Failure> {
    let record = match (input, specs) {
        (Some(path), _) => load_bundle(&read(&path)?, strictness)?,
        (None, [Some(f), Some(b), Some(t)]) => BundleRecord {
            fiber: parse_variety_spec(&f)?,
            base: parse_variety_spec(&b)?,
            total: parse_variety_spec(&t)?,
        },
        _ => return Err(Failure::Invalid("bundle needs --input or all of --fiber, --base, --total".into())),
    };
    ok(Report::Bundle(Box::new(BundleReport::new(&record, strictness)?)))
}

fn fault_for(claim: Claim) -> Result<Fault, Failure> {
    match claim {
        Claim::ClosedForm | Claim::DifferenceIdentity => Ok(Fault::PerturbCofactor),
        Claim::SignatureMod4 | Claim::DualityConsequences => Ok(Fault::PerturbForm),
        Claim::RoundTrip | Claim::StrictTriples => {
            Err(Failure::Invalid(format!("--inject-fault is not available for {claim}")))
        }
    }
}

struct VerifyArgs {
    claim: String,
    dims: Option<String>,
    samples: u64,
    seed: u64,
    inject_fault: bool,
    cap: Option<u64>,
}

fn verify(args: VerifyArgs, stderr: &mut dyn Write) -> Result<Outcome, Failure> {
    let claim = Claim::parse(&args.claim).ok_or_else(|| {
        let names: Vec<&str> = Claim::ALL.iter().map(Claim::name).collect();
        Failure::Invalid(format!("unknown claim {:?}; expected one of {}", args.claim, names.join(", ")))
    })?;
    let range = match &args.dims {
        Some(text) => parse_range(text).ok_or_else(|| Failure::Invalid(format!("bad --dims {text:?}; use A..B")))?,
        None => default_range(claim),
    };
    let mut opts = VerifyOptions::default();
    if args.inject_fault {
        opts.fault = Some(fault_for(claim)?);
    }
    if let Some(cap) = args.cap {
        opts.exhaustion_cap = cap;
    }
    let verdicts: Vec<VerificationVerdict> = match claim {
        Claim::RoundTrip => range.map(|d| round_trip_sweep(d, args.samples, args.seed)).collect(),
        Claim::StrictTriples => sweep_parameters(claim, &range)
            .into_iter()
            .map(|(f, b)| strict_triple_sweep(f, b, args.samples, args.seed))
            .collect(),
        _ => verify_sweep(claim, &range, &opts)?,
    };
    let mut refuted = false;
    for v in &verdicts {
        let status = if v.proved() { "proved" } else { "refuted" };
        refuted |= !v.proved();
        let _ = writeln!(stderr, "{status}: {}", v.label());
    }
    Ok(Outcome { report: Report::Verdict(verdicts), refuted })
}

fn bryan_donagi(g: i64, n: i64, fibration: u8) -> Result<Outcome, Failure> {
    let ex = bryan_donagi_example(g, n).map_err(|e| Failure::Invalid(e.to_string()))?;
    let checks = bryan_donagi_checks(&ex).map_err(|e| Failure::Invalid(e.to_string()))?;
    let spec = |genus: &num_bigint::BigInt| parse_variety_spec(&format!("curve:{genus}"));
    let (b, f) = &ex.fibrations[usize::from(fibration) - 1];
    let record = BundleRecord { fiber: spec(f)?, base: spec(b)?, total: parse_variety_spec(&format!("bd:{g},{n}"))? };
    let report = BundleReport::new(&record, Strictness::Strict)?;
    Ok(Outcome { report: Report::Bundle(Box::new(report)), refuted: checks.iter().any(|(_, pass)| !pass) })
}

fn execute(cli: Cli, stderr: &mut dyn Write) -> Result<(Outcome, Common), Failure> {
    let strictness = if cli.common.lax { Strictness::Lax } else { Strictness::Strict };
    let outcome = match cli.command {
        Command::Genus { input, variety } => genus(input, variety, strictness)?,
        Command::Bundle { input, fiber, base, total } => bundle(input, [fiber, base, total], strictness)?,
        Command::Verify { claim, dims, samples, seed, inject_fault, cap } => {
            verify(VerifyArgs { claim, dims, samples, seed, inject_fault, cap }, stderr)?
        }
        Command::Catalog => ok(Report::Table(fixed_catalog().iter().map(VarietyRecord::genus_row).collect()))?,
        Command::BryanDonagi { g, n, fibration } => bryan_donagi(g, n, fibration)?,
    };
    Ok((outcome, cli.common))
}

/// Runs the CLI with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(cli, stderr).and_then(|(outcome, common)| {
        let format = match common.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        let bytes = render_report(&ReportDocument::new(outcome.report), format)?;
        match &common.out {
            Some(path) => std::fs::write(path, &bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => stdout.write_all(bytes.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
        }?;
        Ok(outcome.refuted)
    });
    match result {
        Ok(false) => EXIT_OK,
        Ok(true) => EXIT_REFUTED,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "io error: {msg}");
            EXIT_IO
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("genus-forge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..20"), Some(1..=20));
        assert_eq!(parse_range("2..=4"), Some(2..=4));
        assert_eq!(parse_range("3"), Some(3..=3));
        assert_eq!(parse_range("4..2"), None);
        assert_eq!(parse_range("a..2"), None);
    }

    #[test]
    fn genus_csv() {
        let (code, out, _) = run_capture(&["genus", "--variety", "pn:2", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "P2,2,3,1,1,1 -1 1\n"));
    }

    #[test]
    fn bundle_bryan_donagi() {
        let (code, out, _) =
            run_capture(&["bundle", "--fiber", "curve:25", "--base", "curve:2", "--total", "bd:2,2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("difference,2,0,4,16,4 8 4\n"), "{out}");
        let (code, out, _) = run_capture(&["bryan-donagi", "2", "2", "--fibration", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("curve_g4,1,-6,-3,0,-3 3\ncurve_g9,"), "{out}");
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, err) = run_capture(&["verify", "--claim", "closed-form", "--dims", "1..4"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("\"kind\": \"verdict\""));
        let (code, _, err) = run_capture(&["verify", "--claim", "closed-form", "--dims", "3", "--inject-fault"]);
        assert_eq!(code, 2);
        assert!(err.contains("refuted: closed-form dim=3"));
        let (code, _, _) = run_capture(&["verify", "--claim", "closed-form", "--dims", "0"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_capture(&["verify", "--claim", "nonsense"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_capture(&["verify", "--claim", "closed-form", "--format", "csv", "--dims", "2"]);
        assert_eq!(code, 1);
        let (code, _, err) = run_capture(&["verify", "--claim", "signature-mod4", "--dims", "4", "--cap", "10"]);
        assert_eq!(code, 1);
        assert!(err.contains("not attempted"));
    }

    #[test]
    fn usage_and_io_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, 1);
        assert_eq!(run_capture(&["genus"]).0, 1);
        assert_eq!(run_capture(&["genus", "--input", "/nonexistent/x.json"]).0, 3);
        assert_eq!(run_capture(&["catalog", "--out", "/nonexistent/dir/out.json"]).0, 3);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn lax_threads_through() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, r#"{"schema":"genus-forge/variety/v1","dim":1,"chi":[1,2]}"#).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(run_capture(&["genus", "--input", p]).0, 1);
        let (code, out, _) = run_capture(&["genus", "--input", p, "--lax", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "unnamed,1,-1,1,3,1 2\n"));
    }
}

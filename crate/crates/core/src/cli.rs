//! Command-line front end: `rate`, `sweep`, `verify` and `gdof`.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage, 3 precondition,
//! 4 I/O. `ICUP_THREADS` caps the worker count.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::channel::ChannelParams;
use crate::error::Error;
use crate::format::{fmt_num, write_gdof_csv, write_sweep_csv, write_sweep_json, SweepRow};
use crate::gap::{gap_report, verify_suite_named, RateReport};
use crate::gdof::gdof_curve;
use crate::grid::{product, Axis, Preset};
use crate::strong::SchemeLabel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const THREADS_ENV: &str = "ICUP_THREADS";

#[derive(Debug, Parser)]
#[command(name = "icup", version, about = "Sum-rate bounds and gaps for the symmetric Gaussian interference channel with unidirectional cooperation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Achievable rate, upper bound and gap at one operating point.
    Rate(RateArgs),
    /// Rate reports over a parameter grid, as CSV or JSON.
    Sweep(SweepArgs),
    /// Check the constant-gap claims over a preset grid.
    ///
    /// Suites: theorem1, theorem2, strong, noise-limited, appendix, oracle,
    /// soundness, gdof, all.
    ///
    /// Grid `default`: P at 65 log-spaced points on [1e-2, 1e6], a at 57
    /// log-spaced points on [1e-3, 1e4], C12 in {0, 0.05, 0.1, 0.25, 0.5, 1,
    /// 2, 3, 5, 10, 20} plus 1.01·C(bP) and, when aP > 1, the
    /// full-cooperation threshold C(b(aP-1)/(2a+1)) per point. Grid `coarse`
    /// uses 17 × 15 (P, a) points with the same C12 values.
    Verify(VerifyArgs),
    /// GDOF table d(alpha, beta) over an alpha range.
    Gdof(GdofArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct RateArgs {
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: f64,
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long = "c12", allow_negative_numbers = true)]
    pub c12: f64,
    /// `auto` or one of the scheme labels (e.g. UniversalPA, TreatAsNoise).
    #[arg(long, default_value = "auto")]
    pub scheme: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Power axis: VALUE or MIN:MAX:COUNT[:lin|log].
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: String,
    /// Interference-gain axis, same syntax.
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a: String,
    /// Cooperative-link axis, same syntax.
    #[arg(long = "c12", allow_negative_numbers = true)]
    pub c12: String,
    #[arg(long, default_value = "auto")]
    pub scheme: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value = "default")]
    pub grid: String,
}

#[derive(Debug, clap::Args)]
pub struct GdofArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long = "alpha-min", allow_negative_numbers = true)]
    pub alpha_min: f64,
    #[arg(long = "alpha-max")]
    pub alpha_max: f64,
    #[arg(long)]
    pub step: f64,
    /// Also estimate the GDOF numerically at this power.
    #[arg(long = "numeric-p")]
    pub numeric_p: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// A validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub p: Axis,
    pub a: Axis,
    pub c12: Axis,
    pub scheme: Option<SchemeLabel>,
    pub format: OutputFormat,
}

/// Evaluate every grid point; rows come back in `P`, `a`, `C12` order
/// regardless of how the work was scheduled.
pub fn run_sweep(spec: &SweepSpec) -> crate::Result<Vec<RateReport>> {
    let points = product(&spec.p, &spec.a, &spec.c12)?;
    points.par_iter().map(|p| gap_report(p, spec.scheme)).collect()
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_scheme(s: &str) -> crate::Result<Option<SchemeLabel>> {
    if s.eq_ignore_ascii_case("auto") {
        Ok(None)
    } else {
        s.parse().map(Some)
    }
}

fn thread_pool() -> crate::Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Usage(format!("{THREADS_ENV} must be a positive integer, got '{v}'")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn print_report<W: Write>(out: &mut W, r: &RateReport) -> io::Result<()> {
    writeln!(out, "P           {}", fmt_num(r.params.p()))?;
    writeln!(out, "a           {}", fmt_num(r.params.a()))?;
    writeln!(out, "C12         {}", fmt_num(r.params.c12()))?;
    writeln!(out, "regime      {}", r.regime)?;
    writeln!(out, "scheme      {}", r.scheme)?;
    writeln!(out, "achievable  {} bits", fmt_num(r.achievable))?;
    writeln!(out, "upper       {} bits ({})", fmt_num(r.upper), r.bound_label)?;
    writeln!(out, "gap         {} bits", fmt_num(r.gap))
}

fn cmd_rate<W: Write>(args: &RateArgs, out: &mut W) -> Result<i32, Failure> {
    let params = ChannelParams::new(args.p, args.a, args.c12)?;
    let report = gap_report(&params, parse_scheme(&args.scheme)?)?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &SweepRow::from(&report)).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        print_report(out, &report)?;
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, Failure> {
    let spec = SweepSpec {
        p: args.p.parse()?,
        a: args.a.parse()?,
        c12: args.c12.parse()?,
        scheme: parse_scheme(&args.scheme)?,
        format: args.format,
    };
    let reports = run_sweep(&spec)?;
    let mut out = open_output(&args.output)?;
    match spec.format {
        OutputFormat::Csv => write_sweep_csv(&mut out, &reports)?,
        OutputFormat::Json => write_sweep_json(&mut out, &reports)?,
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_verify<W: Write>(args: &VerifyArgs, out: &mut W) -> Result<i32, Failure> {
    let preset: Preset = args.grid.parse()?;
    let grid = preset.points();
    let reports = verify_suite_named(&args.suite, &grid)?;
    let mut all_pass = true;
    for r in &reports {
        for c in &r.checks {
            let status = match (c.informational, c.violations) {
                (true, _) => "INFO",
                (false, 0) => "PASS",
                _ => "FAIL",
            };
            writeln!(
                out,
                "{:<14} {:<28} points={:<7} max_observed={:<16} claimed={} violations={} {}",
                r.suite.as_str(),
                c.check,
                c.points,
                fmt_num(c.max_observed),
                fmt_num(c.claimed),
                c.violations,
                status
            )?;
        }
        for v in r.violations.iter().take(5) {
            writeln!(
                out,
                "  violation: {} at {}: observed {} > claimed {}",
                v.check,
                v.point,
                fmt_num(v.observed_gap),
                fmt_num(v.claimed_bound)
            )?;
        }
        writeln!(
            out,
            "suite {}: {} ({} points, {} outside hypotheses, {} violations)",
            r.suite,
            if r.passed() { "PASS" } else { "FAIL" },
            r.points,
            r.skipped,
            r.violations.len()
        )?;
        all_pass &= r.passed();
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn cmd_gdof(args: &GdofArgs) -> Result<i32, Failure> {
    let points = gdof_curve(args.beta, args.alpha_min, args.alpha_max, args.step, args.numeric_p)?;
    let mut out = open_output(&args.output)?;
    write_gdof_csv(&mut out, &points, args.numeric_p.is_some())?;
    out.flush()?;
    Ok(EXIT_OK)
}

/// Parse `args` (program name first) and run, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let stdout = io::stdout();
    let result = pool.install(|| match &cli.command {
        Command::Rate(a) => cmd_rate(a, &mut stdout.lock()),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a, &mut stdout.lock()),
        Command::Gdof(a) => cmd_gdof(a),
    });
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Precondition(_) => EXIT_PRECONDITION,
                Error::Domain(_) | Error::Usage(_) => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

//! `varregion` command-line front-end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage or invalid parameters,
//! 3 I/O, 4 numerical non-convergence, 5 containment breach.

pub mod render;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;

use crate::error::Error;
use crate::extremal::{extremal_fprime, extremal_value, ExtremalSpec};
use crate::quadrature::QuadratureConfig;
use crate::region::{
    boundary_curve, contains, variability_region, EvalPoint, JanowskiParams, Membership, RegionShape, DEFAULT_TOL,
};
use crate::schwarz::{member_log_fprime, ConstrainedSchwarz};
use crate::verify::{run_suite, sample_member_inner, Suite, SuiteConfig};
use render::{
    boundary_csv, render_svg, rows_from_curve, samples_csv, write_atomic, BoundaryRow, RegionRecord, SampleRow,
};
use sweep::{parse_grid, IndexEntry, SweepIndex};

pub const OUT_DIR_ENV: &str = "OVERRIDE_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    VerificationFailed = 1,
    Usage = 2,
    Io = 3,
    Numeric = 4,
    Containment = 5,
}

#[derive(Debug)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::Usage,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::Io,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Convergence { .. } => ExitStatus::Numeric,
            _ => ExitStatus::Usage,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "varregion", version, about = "Regions of variability of log f'(z0)")]
pub struct Cli {
    /// Seed for every random stream.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Membership tolerance on the pullback modulus.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Output file (directory for `sweep`); stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; inferred from the --out extension, else csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long = "A", id = "param_a", allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long = "B", id = "param_b", allow_hyphen_values = true)]
    pub b: f64,
    /// `re,im`, or a single real.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub lambda: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary curve of the region at (z0, lambda).
    Region {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        z0: String,
        #[arg(long, default_value_t = 256)]
        theta_samples: usize,
    },
    /// F_{a,lambda}(z) and its derivative.
    Extremal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 16)]
        nodes: usize,
        #[arg(long, default_value_t = 4096)]
        max_panels: usize,
        #[arg(long, default_value_t = 1e-12)]
        abs_tol: f64,
    },
    /// Values of log f'(z0) for seeded random class members.
    Sample {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        z0: String,
        #[arg(long, default_value_t = 1000)]
        mc_samples: usize,
        #[arg(long, default_value_t = 256)]
        theta_samples: usize,
    },
    /// Run verification suites and emit a JSON report array.
    Verify {
        /// prop1, corollary0, unit-lambda, rotation, coverage, convexity, inclusion, halfplane or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random members per case.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// One region record per grid block plus index.json.
    Sweep {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long, default_value_t = 256)]
        theta_samples: usize,
    },
}

/// Parses `re,im` or a single real.
pub fn parse_complex(s: &str) -> CliResult<Complex64> {
    let bad = || CliError::usage(format!("expected `re,im` or a real number, got `{s}`"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(bad()),
    }
}

fn params_of(args: &ParamArgs) -> CliResult<(JanowskiParams, Complex64)> {
    let params = JanowskiParams::new(args.a, args.b).map_err(|e| CliError::usage(format!("invalid parameters: {e}")))?;
    Ok((params, parse_complex(&args.lambda)?))
}

fn point_of(z0: Complex64, lambda: Complex64) -> CliResult<EvalPoint> {
    EvalPoint::new(z0, lambda).map_err(|e| CliError::usage(format!("invalid point: {e}")))
}

struct Output<'a> {
    path: Option<PathBuf>,
    format: Format,
    stdout: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, contents: &str) -> CliResult<()> {
        match &self.path {
            Some(p) => write_atomic(p, contents.as_bytes()).map_err(|e| CliError::io(format!("{}: {e}", p.display()))),
            None => self
                .stdout
                .write_all(contents.as_bytes())
                .map_err(|e| CliError::io(format!("stdout: {e}"))),
        }
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn infer_format(explicit: Option<Format>, path: Option<&Path>) -> Format {
    explicit.unwrap_or_else(|| match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("svg") => Format::Svg,
        Some("json") => Format::Json,
        _ => Format::Csv,
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Region record with `theta_samples` boundary samples (one sample for singleton regions).
pub fn region_record(params: JanowskiParams, point: EvalPoint, theta_samples: usize) -> crate::Result<RegionRecord> {
    match variability_region(&point, &params)? {
        RegionShape::Singleton(v) => {
            let note = if point.z0().norm() == 0.0 {
                "z0 = 0: the region is the singleton {0}"
            } else {
                "|lambda| = 1: the region is a singleton"
            };
            Ok(RegionRecord {
                params,
                point,
                center: [1.0 + params.b() * (point.lambda() * point.z0()).re, (params.b() * point.lambda() * point.z0()).im],
                radius: 0.0,
                boundary: vec![BoundaryRow { theta: 0.0, re: v.re, im: v.im }],
                singleton: Some([v.re, v.im]),
                note: Some(note.to_string()),
            })
        }
        RegionShape::Disk { canonical, disk } => {
            let curve = boundary_curve(&canonical, &params, theta_samples)?;
            let note = (canonical != point)
                .then(|| "complex lambda: theta parametrizes the boundary at (z0 e^{i arg lambda}, |lambda|)".to_string());
            Ok(RegionRecord {
                params,
                point,
                center: [disk.center.re, disk.center.im],
                radius: disk.radius,
                boundary: rows_from_curve(&curve),
                singleton: None,
                note,
            })
        }
    }
}

fn cmd_region(
    params: &ParamArgs,
    z0: &str,
    theta_samples: usize,
    out: &mut Output,
    stderr: &mut dyn Write,
) -> CliResult<ExitStatus> {
    if theta_samples < 3 {
        return Err(CliError::usage("--theta-samples must be >= 3"));
    }
    let (params, lambda) = params_of(params)?;
    let point = point_of(parse_complex(z0)?, lambda)?;
    let record = region_record(params, point, theta_samples)?;
    if let Some(note) = &record.note {
        let _ = writeln!(stderr, "note: {note}");
    }
    let body = match out.format {
        Format::Csv => boundary_csv(&record.boundary),
        Format::Json => to_json(&record),
        Format::Svg => render_svg(&record.boundary_values(), &[]),
    };
    out.emit(&body)?;
    Ok(ExitStatus::Ok)
}

#[allow(clippy::too_many_arguments)]
fn cmd_extremal(
    params: &ParamArgs,
    a: &str,
    z: &str,
    nodes: usize,
    max_panels: usize,
    abs_tol: f64,
    stdout: &mut dyn Write,
) -> CliResult<ExitStatus> {
    let (params, lambda) = params_of(params)?;
    let spec = ExtremalSpec::new(parse_complex(a)?, lambda, params)?;
    let z = parse_complex(z)?;
    let cfg = QuadratureConfig {
        nodes_per_panel: nodes,
        max_panels,
        abs_tol,
    };
    let value = extremal_value(&spec, z, &cfg)?;
    let deriv = extremal_fprime(&spec, z)?;
    use render::fmt15;
    writeln!(stdout, "{} {}", fmt15(value.re), fmt15(value.im)).map_err(|e| CliError::io(e.to_string()))?;
    writeln!(stdout, "{} {}", fmt15(deriv.re), fmt15(deriv.im)).map_err(|e| CliError::io(e.to_string()))?;
    Ok(ExitStatus::Ok)
}

/// Seeded member values at `(z0, lambda)` with their membership verdicts.
pub fn sample_rows(
    params: &JanowskiParams,
    point: &EvalPoint,
    mc_samples: usize,
    seed: u64,
    tol: f64,
) -> crate::Result<Vec<SampleRow>> {
    (0..mc_samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = ConstrainedSchwarz::new(sample_member_inner(seed, i), point.lambda())?;
            let w = member_log_fprime(&s, params, point.z0())?;
            let verdict = match contains(w, point, params, tol) {
                Ok(v) => v.status,
                // z0 = 0: every member gives log f'(0) = 0, the whole (singleton) region.
                Err(Error::DegeneratePoint) => Membership::Boundary,
                Err(e) => return Err(e),
            };
            Ok(SampleRow {
                seed_index: i,
                re: w.re,
                im: w.im,
                verdict,
            })
        })
        .collect()
}

fn cmd_sample(
    cli: &Cli,
    params: &ParamArgs,
    z0: &str,
    mc_samples: usize,
    theta_samples: usize,
    out: &mut Output,
    stderr: &mut dyn Write,
) -> CliResult<ExitStatus> {
    if mc_samples < 1 {
        return Err(CliError::usage("--mc-samples must be >= 1"));
    }
    let (params, lambda) = params_of(params)?;
    let point = point_of(parse_complex(z0)?, lambda)?;
    if point.lambda().norm() >= 1.0 {
        return Err(CliError::usage("sampling needs |lambda| < 1 (|lambda| = 1 is a singleton)"));
    }
    let rows = sample_rows(&params, &point, mc_samples, cli.seed, cli.tol)?;
    let body = match out.format {
        Format::Csv => samples_csv(&rows),
        Format::Json => to_json(&json!({"params": params, "point": point, "seed": cli.seed, "samples": rows})),
        Format::Svg => {
            let record = region_record(params, point, theta_samples.max(3))?;
            let cloud: Vec<_> = rows.iter().map(|r| Complex64::new(r.re, r.im)).collect();
            render_svg(&record.boundary_values(), &cloud)
        }
    };
    out.emit(&body)?;
    let breaches: Vec<_> = rows.iter().filter(|r| r.verdict == Membership::Outside).collect();
    if breaches.is_empty() {
        return Ok(ExitStatus::Ok);
    }
    let _ = writeln!(stderr, "containment breach: {} sample(s) outside the region", breaches.len());
    for r in breaches.iter().take(20) {
        let _ = writeln!(stderr, "  seed_index={} w={}+{}i", r.seed_index, r.re, r.im);
    }
    Ok(ExitStatus::Containment)
}

fn cmd_verify(cli: &Cli, suite: &str, samples: usize, out: &mut Output, stderr: &mut dyn Write) -> CliResult<ExitStatus> {
    let suites = Suite::parse_selection(suite).ok_or_else(|| {
        CliError::usage(format!(
            "unknown suite `{suite}` (expected one of prop1, corollary0, unit-lambda, rotation, coverage, convexity, inclusion, halfplane, all)"
        ))
    })?;
    if !(cli.tol > 0.0) {
        return Err(CliError::usage("--tol must be > 0"));
    }
    let cfg = SuiteConfig {
        seed: cli.seed,
        tol: cli.tol,
        n_samples: samples,
        ..SuiteConfig::default()
    };
    let reports = suites
        .iter()
        .map(|s| run_suite(*s, &cfg))
        .collect::<crate::Result<Vec<_>>>()?;
    out.emit(&to_json(&reports))?;
    let mut status = ExitStatus::Ok;
    for r in &reports {
        let _ = writeln!(
            stderr,
            "{:<12} {} max_violation={:.3e} tol={:.1e} samples={}",
            r.suite_name,
            if r.passed { "PASS" } else { "FAIL" },
            r.max_violation,
            r.tolerance,
            r.samples
        );
        if !r.passed {
            status = ExitStatus::VerificationFailed;
        }
    }
    Ok(status)
}

fn cmd_sweep(out_dir: Option<&Path>, grid: &Path, theta_samples: usize, stderr: &mut dyn Write) -> CliResult<ExitStatus> {
    let out_dir = out_dir.ok_or_else(|| CliError::usage("sweep needs --out <dir>"))?;
    if theta_samples < 3 {
        return Err(CliError::usage("--theta-samples must be >= 3"));
    }
    let text = std::fs::read_to_string(grid).map_err(|e| CliError::io(format!("{}: {e}", grid.display())))?;
    let blocks = parse_grid(&text).map_err(|e| CliError::usage(format!("{}: {e}", grid.display())))?;
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(format!("{}: {e}", out_dir.display())))?;
    let mut index = SweepIndex {
        blocks: blocks.len(),
        unique: 0,
        records: Vec::new(),
    };
    for block in &blocks {
        let hash = block.hash();
        if let Some(entry) = index.records.iter_mut().find(|e| e.hash == hash) {
            entry.lines.push(block.line);
            entry.deduplicated = true;
            continue;
        }
        let built = JanowskiParams::new(block.get("A"), block.get("B")).and_then(|p| {
            let point = EvalPoint::new(
                Complex64::new(block.get("z0_re"), block.get("z0_im")),
                Complex64::new(block.get("lambda_re"), block.get("lambda_im")),
            )?;
            region_record(p, point, theta_samples)
        });
        let entry = match built {
            Ok(record) => {
                let file = format!("region-{hash}.json");
                let path = out_dir.join(&file);
                write_atomic(&path, to_json(&record).as_bytes())
                    .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
                IndexEntry {
                    hash,
                    file: Some(file),
                    status: "ok".into(),
                    reason: None,
                    lines: vec![block.line],
                    deduplicated: false,
                }
            }
            Err(e) => {
                let _ = writeln!(stderr, "line {}: rejected: {e}", block.line);
                IndexEntry {
                    hash,
                    file: None,
                    status: "rejected".into(),
                    reason: Some(e.to_string()),
                    lines: vec![block.line],
                    deduplicated: false,
                }
            }
        };
        index.records.push(entry);
    }
    index.unique = index.records.len();
    let path = out_dir.join("index.json");
    write_atomic(&path, to_json(&index).as_bytes()).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    Ok(ExitStatus::Ok)
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<ExitStatus> {
    let out_path = cli.out.as_deref().map(resolve_out);
    let format = infer_format(cli.format, out_path.as_deref());
    match &cli.command {
        Command::Region {
            params,
            z0,
            theta_samples,
        } => {
            let mut out = Output {
                path: out_path,
                format,
                stdout,
            };
            cmd_region(params, z0, *theta_samples, &mut out, stderr)
        }
        Command::Extremal {
            params,
            a,
            z,
            nodes,
            max_panels,
            abs_tol,
        } => cmd_extremal(params, a, z, *nodes, *max_panels, *abs_tol, stdout),
        Command::Sample {
            params,
            z0,
            mc_samples,
            theta_samples,
        } => {
            let mut out = Output {
                path: out_path,
                format,
                stdout,
            };
            cmd_sample(cli, params, z0, *mc_samples, *theta_samples, &mut out, stderr)
        }
        Command::Verify { suite, samples } => {
            let mut out = Output {
                path: out_path,
                format: Format::Json,
                stdout,
            };
            cmd_verify(cli, suite, *samples, &mut out, stderr)
        }
        Command::Sweep { grid, theta_samples } => cmd_sweep(out_path.as_deref(), grid, *theta_samples, stderr),
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => ExitStatus::Usage as i32,
            };
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(status) => status as i32,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.status as i32
        }
    }
}

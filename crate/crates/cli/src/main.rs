//! `negconc`: entanglement reports, randomized checks and sweep CSVs.
//!
//! Exit codes: 0 ok, 1 property failure, 2 input or I/O error,
//! 3 internal inconsistency.

mod format;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use negconc_core::measures::{self, MeasureReport};
use negconc_core::sweeps::{self, SweepParams, SweepRow};
use negconc_core::verify;
use negconc_core::{Error, PureState, SchmidtVector, Tolerances};

use crate::format::sig12;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "negconc",
    version,
    about = "Negativity and concurrence of bipartite qudit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute every measure for one pure state.
    Report(ReportArgs),
    /// Run the randomized property suites.
    Check(CheckArgs),
    /// Emit the k1 = k2 = sqrt(x/2), k3 = sqrt(1 - x) family as CSV.
    SweepX(SweepArgs),
    /// Emit the first-octant spherical family as CSV.
    SweepSphere(SweepArgs),
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Schmidt coefficients, comma separated (state sum_i k_i |ii>).
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "state", required_unless_present = "state")]
    schmidt: Option<Vec<f64>>,
    /// Amplitude file: `dims,d_A,d_B` header then `i,j,re,im` lines.
    #[arg(long)]
    state: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Grid points per axis (endpoints included).
    #[arg(long, default_value_t = sweeps::DEFAULT_STEPS as u64, value_parser = clap::value_parser!(u64).range(2..))]
    steps: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TolArgs {
    /// Per-case deviation bound for the property suites.
    #[arg(long)]
    tol: Option<f64>,
    /// Smallest partial-transpose eigenvalue still counted as PPT.
    #[arg(long)]
    ppt_tol: Option<f64>,
    /// Inline Schmidt input is renormalized when sum k^2 is within this of 1.
    #[arg(long)]
    schmidt_tol: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(x) = self.tol {
            t.property = x;
        }
        if let Some(x) = self.ppt_tol {
            t.ppt = x;
        }
        if let Some(x) = self.schmidt_tol {
            t.schmidt_input = x;
        }
        t
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalInconsistency { .. } | Error::NoConvergence { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Check(args) => cmd_check(args),
        Command::SweepX(args) => cmd_sweep(args, false),
        Command::SweepSphere(args) => cmd_sweep(args, true),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("negconc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("cannot write stdout: {e}"))),
    }
}

fn header(out: &mut String, command: &str, seed: Option<u64>, tol: &Tolerances) {
    let seed = seed.map_or("none".to_string(), |s| s.to_string());
    let _ = writeln!(out, "# negconc {VERSION} {command}");
    let _ = writeln!(out, "# seed: {seed}");
    let _ = writeln!(out, "# tolerances: {}", tol.describe());
}

fn cmd_report(args: &ReportArgs) -> Result<u8, Failure> {
    let tol = args.tol.resolve();
    let (state, source) = match (&args.schmidt, &args.state) {
        (Some(k), None) => {
            let k = SchmidtVector::normalized_from(k.clone(), tol.schmidt_input)?;
            let joined: Vec<String> = k.coefficients().iter().map(|x| sig12(*x)).collect();
            (
                PureState::from_schmidt(&k),
                format!("schmidt {}", joined.join(",")),
            )
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            let state = PureState::parse_amplitudes(&text)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            (state, format!("file {}", path.display()))
        }
        _ => {
            return Err(Failure::input(
                "exactly one of --schmidt or --state is required",
            ))
        }
    };

    let report = measures::full_report_with(&state, &tol)?;
    let mut out = String::new();
    header(&mut out, "report", None, &tol);
    let _ = writeln!(out, "# source: {source}");
    render_report(&mut out, &report);
    emit(args.output.as_deref(), &out)?;
    Ok(0)
}

fn render_report(out: &mut String, r: &MeasureReport) {
    let opt = |x: Option<f64>| x.map_or("NA".to_string(), sig12);
    let schmidt: Vec<String> = r.schmidt.iter().map(|x| sig12(*x)).collect();
    let lines = [
        ("dim_a", r.dim_a.to_string()),
        ("dim_b", r.dim_b.to_string()),
        ("schmidt", schmidt.join(",")),
        ("negativity", sig12(r.negativity)),
        ("negativity_vidal", sig12(r.negativity_vidal)),
        ("log_negativity", sig12(r.log_negativity)),
        ("concurrence", opt(r.concurrence)),
        ("ladder_expectation", sig12(r.ladder_expectation)),
        ("ladder_all_pairs", sig12(r.ladder_all_pairs)),
        ("entropy", sig12(r.entropy)),
        ("relation_residual", opt(r.relation_residual)),
        ("ppt", r.ppt.to_string()),
    ];
    for (key, value) in lines {
        let _ = writeln!(out, "{key}={value}");
    }
}

fn cmd_check(args: &CheckArgs) -> Result<u8, Failure> {
    let tol = args.tol.resolve();
    let summary = verify::run_checks(args.samples as usize, args.seed, &tol)?;

    let mut out = String::new();
    header(&mut out, "check", Some(args.seed), &tol);
    let _ = writeln!(out, "# samples: {}", args.samples);
    for s in &summary.suites {
        let _ = writeln!(
            out,
            "suite={} cases={} max_deviation={} status={}",
            s.name,
            s.cases,
            sig12(s.max_deviation),
            if s.passed() { "pass" } else { "FAIL" }
        );
    }
    // The cyclic and all-pairs ladder operators agree only up to d = 3.
    let (cyclic, all_pairs) = summary.ladder_d4;
    let _ = writeln!(out, "ladder_d4_cyclic={}", sig12(cyclic));
    let _ = writeln!(out, "ladder_d4_all_pairs={}", sig12(all_pairs));

    let failed = summary.suites.iter().find(|s| !s.passed());
    if let Some(s) = failed {
        let index = s.first_failure.expect("failed suite has an index");
        let _ = writeln!(
            out,
            "first_failure=suite:{} seed:{} index:{index}",
            s.name, args.seed
        );
    }
    let _ = writeln!(
        out,
        "result={}",
        if failed.is_none() { "pass" } else { "fail" }
    );
    emit(args.output.as_deref(), &out)?;
    Ok(if failed.is_none() { 0 } else { 1 })
}

fn cmd_sweep(args: &SweepArgs, sphere: bool) -> Result<u8, Failure> {
    let steps = args.steps as usize;
    let (name, rows) = if sphere {
        ("sweep-sphere", sweeps::sweep_sphere(steps)?)
    } else {
        ("sweep-x", sweeps::sweep_x(steps)?)
    };
    let mut out = String::new();
    header(&mut out, name, None, &Tolerances::default());
    let _ = writeln!(out, "# steps: {steps}");
    out.push_str(if sphere {
        "theta,phi,k1,k2,k3,N,C\n"
    } else {
        "x,k1,k2,k3,N,C\n"
    });
    for row in &rows {
        write_row(&mut out, row);
    }
    emit(args.output.as_deref(), &out)?;
    Ok(0)
}

fn write_row(out: &mut String, row: &SweepRow) {
    let mut fields: Vec<String> = match row.params {
        SweepParams::Line { x } => vec![sig12(x)],
        SweepParams::Sphere { theta, phi } => vec![sig12(theta), sig12(phi)],
    };
    fields.extend(row.k.iter().map(|x| sig12(*x)));
    fields.push(sig12(row.negativity));
    fields.push(sig12(row.concurrence));
    out.push_str(&fields.join(","));
    out.push('\n');
}

//! Command line interface: invariant reports, verification suites, parameter sweeps and
//! figure data.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error, 3 numeric or I/O failure.
//! The environment variable `SEMITORIC_THREADS` bounds the number of worker threads.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semitoric::global::privileged_map_sample;
use semitoric::report::{
    cloud_csv, sweep_csv, InvariantReport, PolygonFile, SweepField, SweepGrid, REPORT_CLOUD_POINTS,
};
use semitoric::verify::{Suite, DEFAULT_SEED};
use semitoric::{Error, ModelParams};

#[derive(Parser)]
#[command(name = "semitoric", version, about = "Symplectic invariants of the coupled angular momenta")]
struct Cli {
    /// Seed for the randomised verification draws.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct ParamArgs {
    /// Radius of the first sphere.
    #[arg(long, allow_hyphen_values = true)]
    r1: f64,
    /// Radius of the second sphere.
    #[arg(long, allow_hyphen_values = true)]
    r2: f64,
    /// Coupling parameter in [0, 1].
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<ModelParams, Failure> {
        Ok(ModelParams::new(self.r1, self.r2, self.t)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Computes every invariant with its verification residuals as JSON.
    Invariants {
        #[command(flatten)]
        params: ParamArgs,
        /// Samples of the privileged momentum map used for the twisting index.
        #[arg(long, default_value_t = REPORT_CLOUD_POINTS)]
        points: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the oracle suites and prints a pass/fail table.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Tabulates a coefficient or the height over a grid of the (u, v) chart as CSV.
    Sweep {
        #[arg(long, value_enum, default_value_t = ChartArg::Uv)]
        chart: ChartArg,
        /// Grid size `NxM` (N values of u, M values of v).
        #[arg(long, default_value = "41x41")]
        grid: String,
        /// One of c_l, c_j, c_ll, c_lj, c_jj, height.
        #[arg(long)]
        field: String,
        /// Range of u as `lo:hi`.
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        u_range: String,
        /// Range of v as `lo:hi`.
        #[arg(long, default_value = "-4:4", allow_hyphen_values = true)]
        v_range: String,
        /// Overall scale `sqrt(R1 R2)`.
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Writes one polygon representative per sign and twisting index.
    Polygons {
        #[command(flatten)]
        params: ParamArgs,
        /// Twisting indices as `lo:hi`.
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        k_range: String,
        #[arg(long, value_enum, default_value_t = PolygonFormat::Json)]
        format: PolygonFormat,
        /// Directory receiving the files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Samples the momentum map and the privileged map as CSV `l,h,nu2`.
    MomentumCloud {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Elliptic,
    Roots,
    Abelian,
    Series,
    Taylor,
    Global,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    Uv,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolygonFormat {
    Svg,
    Json,
}

/// Reason for a nonzero exit.
enum Failure {
    Domain(Error),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Writes to standard output; a reader that closes the pipe early is not an error.
fn say(text: &str) -> Result<(), Failure> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => say(text)?,
    }
    Ok(())
}

fn parse_range<T: std::str::FromStr>(text: &str, name: &str) -> Result<(T, T), Failure> {
    let bad = || Failure::Domain(Error::InvalidParameters(format!("{name} must be written lo:hi, got {text}")));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn parse_grid(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Domain(Error::InvalidParameters(format!("grid must be written NxM, got {text}")));
    let (n, m) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
}

fn configure_threads() {
    if let Some(n) = std::env::var("SEMITORIC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // Only fails when a pool already exists, in which case the existing one is kept.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Invariants { params, points, out } => {
            let p = params.params()?;
            match InvariantReport::compute(&p, points) {
                Ok(report) => emit(out.as_deref(), &to_json(&report))?,
                Err(e @ Error::OutOfFocusFocusRange { .. }) => {
                    emit(out.as_deref(), &to_json(&InvariantReport::classification_only(&p)))?;
                    return Err(Failure::Domain(e));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Elliptic => vec![Suite::Elliptic],
                SuiteArg::Roots => vec![Suite::Roots],
                SuiteArg::Abelian => vec![Suite::Abelian],
                SuiteArg::Series => vec![Suite::Series],
                SuiteArg::Taylor => vec![Suite::Taylor],
                SuiteArg::Global => vec![Suite::Global],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut all_passed = true;
            for suite in suites {
                for report in suite.run(cli.seed) {
                    all_passed &= report.passed();
                    let status = if report.passed() { "PASS" } else { "FAIL" };
                    say(&format!("{:<9} {status}  {} ({:.2} s)\n", suite.name(), report.title, report.seconds))?;
                    for part in &report.parts {
                        let mark = if part.passed { "ok" } else { "fail" };
                        say(&format!("              [{mark}] {}: {}\n", part.label, part.detail))?;
                    }
                }
            }
            if !all_passed {
                return Err(Failure::Verification);
            }
        }
        Command::Sweep { chart: ChartArg::Uv, grid, field, u_range, v_range, kappa, out } => {
            let (nu, nv) = parse_grid(&grid)?;
            let grid =
                SweepGrid { nu, nv, u: parse_range(&u_range, "u-range")?, v: parse_range(&v_range, "v-range")?, kappa };
            emit(out.as_deref(), &sweep_csv(&grid, SweepField::parse(&field)?)?)?;
        }
        Command::Polygons { params, k_range, format, out_dir } => {
            let p = params.params()?;
            p.require_focus_focus()?;
            let (lo, hi): (i32, i32) = parse_range(&k_range, "k-range")?;
            fs::create_dir_all(&out_dir)?;
            for epsilon in [1, -1] {
                for k in lo..=hi {
                    let file = PolygonFile::new(&p, epsilon, k)?;
                    let (ext, text) = match format {
                        PolygonFormat::Svg => ("svg", file.to_svg()),
                        PolygonFormat::Json => ("json", file.to_json()),
                    };
                    let path = out_dir.join(format!("{}.{ext}", file.stem()));
                    fs::write(&path, text)?;
                    say(&format!("{}\n", path.display()))?;
                }
            }
        }
        Command::MomentumCloud { params, points, out } => {
            let p = params.params()?;
            let cloud = privileged_map_sample(&p, points)?;
            emit(out.as_deref(), &cloud_csv(&cloud))?;
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports contain only finite numbers");
    text.push('\n');
    text
}

fn main() -> ExitCode {
    configure_threads();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

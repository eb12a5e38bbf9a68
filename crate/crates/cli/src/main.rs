//! `calorics`: generate, verify and count homogeneous caloric polynomials.
//!
//! Exit status: 0 success, 2 verification failure, 3 count assertion
//! failure, 4 parse or configuration error.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use source::{BuildArgs, SourceArgs};

#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Assertion(String),
    Config(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 2,
            Failure::Assertion(_) => 3,
            Failure::Config(_) => 4,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Assertion(m) | Failure::Config(m) | Failure::Io(m) => m,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "calorics", version, about = "Homogeneous caloric polynomials: construction, verification, nodal counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a polynomial and print it as JSON.
    Gen {
        /// basic, lewy, odd, zero-mod4, high-dim, product or fixture.
        family: String,
        /// Fixture id, for `gen fixture`.
        id: Option<String>,
        #[command(flatten)]
        build: BuildArgs,
        /// Also write the JSON here.
        #[arg(short = 'o', long)]
        out: Option<std::path::PathBuf>,
    },
    /// Check caloricity, homogeneity, the coefficient chain and the
    /// eigenfunction identity.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Count nodal domains.
    Count {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated, strictly increasing resolutions.
        #[arg(long)]
        schedule: Option<String>,
        /// Fail with status 3 unless the count is this and stable.
        #[arg(long)]
        assert: Option<usize>,
        /// Add the time-slice diagnostic.
        #[arg(long)]
        slice: bool,
        /// Half width of the slice box.
        #[arg(long)]
        slice_width: Option<f64>,
        /// Resolution of the slice box.
        #[arg(long, default_value_t = 256)]
        slice_resolution: usize,
        /// Check the count against the known bounds.
        #[arg(long)]
        bounds: bool,
    },
    /// Sweep epsilon for a perturbative family.
    Scan {
        /// lewy, odd or zero-mod4.
        family: String,
        #[command(flatten)]
        build: BuildArgs,
        /// Target count; defaults to the family's.
        #[arg(long)]
        target: Option<usize>,
        /// Comma-separated epsilons.
        #[arg(long = "eps-grid")]
        eps_grid: Option<String>,
        #[arg(long)]
        schedule: Option<String>,
        /// Print the JSON report instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Write nodal points in a spherical shell as CSV.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 128)]
        resolution: usize,
        /// Shell width: radii in [1 - delta, 1].
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        /// Output file; standard output when absent.
        #[arg(short = 'o', long)]
        out: Option<std::path::PathBuf>,
    },
    /// Known bounds on the number of nodal domains.
    Bounds {
        #[arg(short = 'n', long = "dim")]
        dim: usize,
        #[arg(short = 'd', long = "degree")]
        degree: u32,
        /// A count to check against the bounds.
        #[arg(long)]
        count: Option<usize>,
    },
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(text) = std::env::var("CALORICS_THREADS") else { return Ok(()) };
    let threads: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Config(format!("CALORICS_THREADS must be a positive integer, got `{text}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Config(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Gen { family, id, build, out } => commands::gen(&family, id.as_deref(), &build, out.as_deref()),
        Command::Verify { source } => commands::verify(&source),
        Command::Count { source, schedule, assert, slice, slice_width, slice_resolution, bounds } => {
            let opts = commands::CountOptions { schedule, assert, slice, slice_width, slice_resolution, bounds };
            commands::count(&source, &opts)
        }
        Command::Scan { family, build, target, eps_grid, schedule, json } => {
            commands::scan(&family, &build, target, eps_grid.as_deref(), schedule.as_deref(), json)
        }
        Command::Export { source, resolution, delta, out } => commands::export(&source, resolution, delta, out.as_deref()),
        Command::Bounds { dim, degree, count } => commands::bounds(dim, degree, count),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

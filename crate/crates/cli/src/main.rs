//! `finsler`: command-line front end for finsler-core.
//!
//! Every subcommand prints one JSON document to stdout. Exit codes:
//! 0 success, 1 usage, 2 domain or I/O error, 3 failed `check`.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finsler_core::{FourVector, Tolerance, Vec3};

#[derive(Parser, Debug)]
#[command(
    name = "finsler",
    version,
    about = "Generalized Lorentz boosts of an axially anisotropic Finsler spacetime"
)]
struct Cli {
    /// Overrides both absolute and relative tolerance.
    #[arg(long, global = true, env = "FINSLER_TOL", value_name = "TOL")]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boost matrix, both parametrizations, dilatation and an optional image event.
    Boost(BoostArgs),
    /// Composition of two boosts with a matrix-product cross-check.
    Compose(ComposeArgs),
    /// Every invariant applicable to the supplied event, velocity and bispinor.
    Invariants(InvariantsArgs),
    /// Applies the generalized bispinor transformation to a bispinor.
    Spinor(SpinorArgs),
    /// Runs the seeded property suites.
    Check(CheckArgs),
    /// Samples a horosphere or cylinder in velocity space and writes it to a file.
    Surface(SurfaceArgs),
}

#[derive(Args, Debug)]
struct Background {
    /// Preferred direction, unit norm.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    nu: Vec3,
    /// Anisotropy exponent.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    r: f64,
}

#[derive(Args, Debug)]
struct BoostArgs {
    #[command(flatten)]
    background: Background,
    /// Boost direction (with --alpha).
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, requires = "alpha", conflicts_with = "v")]
    n: Option<Vec3>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    alpha: Option<f64>,
    /// Frame velocity (instead of --n/--alpha).
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    v: Option<Vec3>,
    /// Event t,x,y,z to transform.
    #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
    x: Option<FourVector>,
}

#[derive(Args, Debug)]
struct ComposeArgs {
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    nu: Vec3,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, requires = "alpha1", conflicts_with = "v1")]
    n1: Option<Vec3>,
    #[arg(long, allow_hyphen_values = true, requires = "n1")]
    alpha1: Option<f64>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    v1: Option<Vec3>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, requires = "alpha2", conflicts_with = "v2")]
    n2: Option<Vec3>,
    #[arg(long, allow_hyphen_values = true, requires = "n2")]
    alpha2: Option<f64>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    v2: Option<Vec3>,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    #[command(flatten)]
    background: Background,
    /// Event t,x,y,z.
    #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
    x: Option<FourVector>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    v: Option<Vec3>,
    /// Bispinor as eight numbers re0,im0,...,re3,im3.
    #[arg(long, value_parser = parse_bispinor, allow_hyphen_values = true)]
    psi: Option<[[f64; 2]; 4]>,
}

#[derive(Args, Debug)]
struct SpinorArgs {
    #[command(flatten)]
    background: Background,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    v: Vec3,
    /// Bispinor as eight numbers re0,im0,...,re3,im3.
    #[arg(long, value_parser = parse_bispinor, allow_hyphen_values = true)]
    psi: [[f64; 2]; 4],
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = finsler_core::conformance::DEFAULT_SAMPLES)]
    samples: usize,
    /// Suite names, repeated or comma-separated; all suites when omitted.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Horosphere,
    Cylinder,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    nu: Vec3,
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    level: f64,
    #[arg(long, default_value_t = 8)]
    rows: usize,
    #[arg(long, default_value_t = 8)]
    cols: usize,
    #[arg(long, default_value_t = 1.5)]
    extent: f64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn parse_numbers<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} comma-separated numbers, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part.parse::<f64>().map_err(|e| format!("'{part}': {e}"))?;
    }
    Ok(out)
}

fn parse_vec3(s: &str) -> Result<Vec3, String> {
    parse_numbers::<3>(s).map(Vec3::from)
}

fn parse_four(s: &str) -> Result<FourVector, String> {
    parse_numbers::<4>(s).map(FourVector::from)
}

fn parse_bispinor(s: &str) -> Result<[[f64; 2]; 4], String> {
    let flat = parse_numbers::<8>(s)?;
    Ok(std::array::from_fn(|i| [flat[2 * i], flat[2 * i + 1]]))
}

pub enum CliError {
    Usage(String),
    Domain(String),
    /// The report is still printed.
    CheckFailed(String),
}

impl From<finsler_core::FinslerError> for CliError {
    fn from(e: finsler_core::FinslerError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let tol = match cli.tol {
        None => Tolerance::default(),
        Some(t) => Tolerance::uniform(t).ok_or_else(|| {
            CliError::Usage(format!("tolerance must be positive and finite, got {t}"))
        })?,
    };
    match cli.command {
        Command::Boost(a) => commands::boost(a, &tol),
        Command::Compose(a) => commands::compose(a, &tol),
        Command::Invariants(a) => commands::invariants(a, &tol),
        Command::Spinor(a) => commands::spinor(a, &tol),
        Command::Check(a) => commands::check(a, &tol),
        Command::Surface(a) => commands::surface(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::CheckFailed(json)) => {
            println!("{json}");
            ExitCode::from(3)
        }
    }
}

//! `kcol`: generate kinetic point scenes, enumerate their collinearity events,
//! audit the counting bounds, and render snapshots.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "kcol", version, about = "Collinearity events of points moving in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated scene as JSON.
    Generate {
        /// tight, tight_ellipse, no_collinearity, no_collinearity_distinct, lower_bound or random
        #[arg(long)]
        construction: String,
        #[arg(long)]
        n: usize,
        /// Collinearity size (lower_bound only).
        #[arg(long)]
        k: Option<usize>,
        /// Denominator exponent for rounded coordinates (tight family only).
        #[arg(long, default_value_t = 40)]
        precision_bits: u32,
        /// RNG seed (random only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the scene goes to stdout when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// List collinearity events in time order.
    Events {
        scene: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmin: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count events with at least k members.
    Count {
        scene: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Print the collinearity surface of two points.
    PairSurface {
        scene: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Audit event counts against the upper bounds; exit 3 on failure.
    Verify {
        scene: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Cross-check against brute-force enumeration (small scenes only).
        #[arg(long)]
        oracle: bool,
    },
    /// Write one SVG snapshot per time.
    Render {
        scene: PathBuf,
        /// Comma-separated times such as `0,1/2,-3` (write `--times=-1/2` for
        /// a leading minus).
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        times: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { construction, n, k, precision_bits, seed, output } => {
            commands::generate(&construction, n, k, precision_bits, seed, output.as_deref())
        }
        Command::Events { scene, kmin, format } => commands::events(&scene, kmin, matches!(format, Format::Csv)),
        Command::Count { scene, k } => commands::count(&scene, k),
        Command::PairSurface { scene, a, b } => commands::pair_surface(&scene, &a, &b),
        Command::Verify { scene, k, oracle } => commands::verify(&scene, k, oracle),
        Command::Render { scene, times, output } => commands::render(&scene, &times, &output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kcol: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

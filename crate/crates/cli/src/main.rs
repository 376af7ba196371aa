//! `ribbon-census`: counting bounds, inequality-chain sweeps and small map
//! censuses from the command line.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 when `--strict` is set and
//! a checked inequality fails.

mod commands;
mod grid;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ribbon_census::bounds::{Rounding, DEFAULT_DIGIT_CAP};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "ribbon-census", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Exit with status 2 if a checked inequality fails.
    #[arg(long, global = true)]
    strict: bool,
    /// Leave wall-clock fields out of the report.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest exact integer (in decimal digits) the exact mode will build.
    #[arg(long, global = true, env = "RIBBON_CENSUS_DIGIT_CAP", default_value_t = DEFAULT_DIGIT_CAP)]
    digit_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum RoundingArg {
    Real,
    Ceiled,
    Exact,
}

impl From<RoundingArg> for Rounding {
    fn from(r: RoundingArg) -> Self {
        match r {
            RoundingArg::Real => Rounding::Real,
            RoundingArg::Ceiled => Rounding::Ceiled,
            RoundingArg::Exact => Rounding::Exact,
        }
    }
}

/// Genus as a single value or a grid.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GenusArgs {
    #[arg(long)]
    g: Option<u64>,
    /// `start:stop:lin|log[:count]`, endpoints inclusive.
    #[arg(long = "g-grid")]
    g_grid: Option<String>,
}

/// Systole cap as a value, a grid, or `auto` for `ln(2g^2)`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SystoleArgs {
    #[arg(long = "L")]
    l: Option<String>,
    #[arg(long = "L-grid")]
    l_grid: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graph-size parameters and every bound at one (g, L).
    Bound {
        #[arg(long)]
        g: u64,
        /// Systole cap, or `auto` for ln(2g^2).
        #[arg(long = "L")]
        l: String,
        #[arg(long, value_enum, default_value = "real")]
        rounding: RoundingArg,
    },
    /// Bounds over a (g, L) grid.
    Sweep {
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        systole: SystoleArgs,
        #[arg(long, value_enum, default_value = "real")]
        rounding: RoundingArg,
    },
    /// Checks the inequality chain at one point or along genus sweeps.
    VerifyChain {
        #[command(flatten)]
        genus: GenusArgs,
        #[command(flatten)]
        systole: SystoleArgs,
    },
    /// Enumerates maps built from plane trees, added edges and rotations.
    Census {
        /// Genus of the closed surface to keep.
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        max_edges: usize,
        /// Defaults to max-edges + 1.
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Defaults to 2 * max-edges.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Stop after this many (tree, edges, rotation) sequences.
        #[arg(long, default_value_t = 100_000_000)]
        work_cap: u64,
        /// Also count exact-shape sequences against the product bound.
        #[arg(long)]
        check_bound: bool,
        /// Write one representative per filling class to this file.
        #[arg(long)]
        dump_maps: Option<PathBuf>,
    },
    /// Euler characteristic of the moduli space of genus-g curves.
    EulerChar {
        #[command(flatten)]
        genus: GenusArgs,
    },
    /// Lower against upper bound for local maxima at a fixed systole cap.
    Gap {
        #[arg(long = "L", default_value_t = 10.0)]
        l: f64,
        #[arg(long = "g-grid", default_value = "2:1000000:log:61")]
        g_grid: String,
    },
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
    match commands::run(&cli.command, &cli.common) {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::StrictFailure) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

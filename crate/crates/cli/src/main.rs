//! Command-line front end for torus-bundle monodromy analysis.
//!
//! Exit status: 0 robust (or success), 1 not obstructed, 2 input error,
//! 3 inapplicable or hypothesis failure, 4 budget exhausted.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "torusaf", version, about = "Galois and Jacobi-Perron invariants of torus-bundle monodromies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cubic,
    Quartic,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, eigenvalue partition, tightness and Galois data.
    Analyze {
        /// Inline JSON rows such as "[[0,1,0],[3,0,1],[-1,0,0]]", or a JSON file path.
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Divisibility obstruction against targets of a smaller dimension.
    Obstruct {
        matrix: String,
        #[arg(long)]
        target_dim: usize,
        /// Restrict 3-dimensional targets to positive discriminant.
        #[arg(long)]
        assume_d_positive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Jacobi-Perron expansion and the stationary incidence matrix.
    Expand {
        matrix: String,
        #[arg(long, env = "BRATTELI_MAX_STEPS", default_value_t = torusaf::jacobiperron::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Write the Bratteli diagram as Graphviz DOT.
        #[arg(long)]
        export_dot: Option<PathBuf>,
        /// Write the Bratteli diagram as JSON.
        #[arg(long)]
        export_json: Option<PathBuf>,
        /// Number of diagram levels to export.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Scan one of the two matrix families over a parameter grid.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        /// Cubic family parameter range, "lo..hi" inclusive.
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        b: String,
        /// Shared second parameter range.
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        c: String,
        /// Quartic family parameter range.
        #[arg(long, allow_hyphen_values = true, default_value = "0..3")]
        a: String,
        /// Directory for per-hit reports and index.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { matrix, json } => commands::analyze(&matrix, json),
        Command::Obstruct { matrix, target_dim, assume_d_positive, json } => {
            commands::obstruct(&matrix, target_dim, assume_d_positive, json)
        }
        Command::Expand { matrix, max_steps, export_dot, export_json, depth, json } => {
            commands::expand(&matrix, max_steps, commands::Exports { dot: export_dot, json: export_json, depth }, json)
        }
        Command::Scan { family, b, c, a, out, jobs, json } => {
            let (first, second) = match family {
                Family::Cubic => (b, c),
                Family::Quartic => (a, c),
            };
            commands::scan(matches!(family, Family::Cubic), &first, &second, out.as_deref(), jobs, json)
        }
    };
    ExitCode::from(code)
}

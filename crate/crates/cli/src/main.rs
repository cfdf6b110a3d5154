//! `eccb`: average eccentricity, girth bounds, proof certificates and Moore
//! chains from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "eccb",
    version,
    about = "Average eccentricity and girth bounds"
)]
pub struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eccentricity profile, girth and degrees of a graph.
    Compute(InputArgs),
    /// Evaluate every upper bound against the measured average eccentricity.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        /// Report a single bound, e.g. `ThmGirthOdd` or `Eq2`.
        #[arg(long)]
        only: Option<String>,
    },
    /// Run the constructive proof and write its certificate.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Use the maximum-degree refinement.
        #[arg(long)]
        maxdeg: bool,
        /// Directory for the certificate file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random connected graph with given minimum degree and girth.
    Generate {
        #[command(flatten)]
        params: GenParams,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the edge-list file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chain of `k` Moore graphs.
    Chain {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        k: usize,
        /// Print the sharpness table for 1..=k instead of the graph.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound and certify every graph of a directory or of a generated corpus.
    Batch {
        /// Directory of `.el` files; omit to generate graphs.
        dir: Option<PathBuf>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for `report.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat generator failures as errors.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, or `-` for standard input.
    pub input: String,
}

#[derive(Debug, Args)]
pub struct GenParams {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long)]
    pub g: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

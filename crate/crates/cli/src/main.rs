use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exact computations with continuous t-norms and finite [0,1]-categories.
#[derive(Parser, Debug)]
#[command(name = "qcat", version, about)]
pub struct Cli {
    /// Built-in t-norm name, inline JSON, or a file holding either.
    #[arg(long, global = true)]
    pub tnorm: Option<String>,

    /// Subquantale K: `m`, `idm`, `unit`, a file, or text like `0,1/4,1/2..3/4,1`.
    #[arg(long, global = true)]
    pub k: Option<String>,

    /// Grid denominator for exhaustive sweeps (each suite has its own default).
    #[arg(long, global = true)]
    pub grid_denominator: Option<u64>,

    /// Cap on candidate maps when enumerating functors.
    #[arg(long, global = true, default_value_t = qcat::DEFAULT_MAX_MAPS)]
    pub max_maps: u64,

    /// Round cap for the reflection fixpoint.
    #[arg(long, global = true, default_value_t = qcat::DEFAULT_MAX_ROUNDS)]
    pub max_rounds: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the randomised suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check category, suitable-set, interval-set and t-norm files.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Apply a construction and write the resulting category.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        /// Input files, in the order the construction takes them.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
    },
    /// Search for a counterexample to cartesian closedness of K-Cat.
    Witness {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Construction {
    Product,
    Tensor,
    HomTensor,
    HomPower,
    Coreflect,
    Reflect,
    InitialLift,
    FinalLift,
    PorRho,
    PorSigma,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("qcat: {err:#}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}

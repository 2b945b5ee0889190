//! Command-line configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zhelobenko_core::exact::scalar::{self, Scalar};
use zhelobenko_core::LieType;

/// Types covered by `all`.
pub const DEFAULT_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

pub const WORKERS_ENV: &str = "ZHELOBENKO_WORKERS";

#[derive(Parser, Debug, Clone)]
#[command(
    name = "zhelobenko",
    version,
    about = "Exact Zhelobenko invariants, principal filtrations and their comparison"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub output: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Add wall-clock timings (the report is then no longer reproducible).
    #[arg(long, global = true)]
    pub timing: bool,

    /// Worker threads for batch commands; defaults to the number of CPUs.
    #[arg(long, env = WORKERS_ENV, global = true)]
    pub workers: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Root data of a simple type.
    Roots {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
        /// Include the table of nonzero Chevalley brackets.
        #[arg(long)]
        debug: bool,
    },
    /// Solve for invariants with `deg P ≤ dmax` and extract generators.
    Solve {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
        #[arg(long, default_value = "-1", value_parser = parse_scalar, allow_hyphen_values = true)]
        c: Scalar,
        /// Defaults to the largest exponent minus one.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// The principal filtration of the Cartan subalgebra.
    Filtration {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
    },
    /// Compare invariants evaluated at sρ with the filtration.
    Verify {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
        #[arg(long, default_value = "1", value_parser = parse_scalar, allow_hyphen_values = true)]
        s: Scalar,
        /// Defaults to the largest exponent.
        #[arg(long)]
        mmax: Option<u32>,
    },
    /// Run `verify` over a list of scalars.
    Scan {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
        /// Comma-separated scalars.
        #[arg(
            long,
            value_delimiter = ',',
            value_parser = parse_scalar,
            allow_hyphen_values = true,
            default_value = "-5,-4,-3,-2,-1,0,1,2,3,4,5"
        )]
        candidates: Vec<Scalar>,
        #[arg(long)]
        mmax: Option<u32>,
    },
    /// Brute-force rank-one check in the enveloping algebra.
    Oracle {
        #[arg(long, default_value_t = 4)]
        mmax: u32,
    },
    /// Filtration, generators and verification at s = 1, 2, 3 for the
    /// built-in type list, plus the rank-one oracle.
    All,
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: zhelobenko_core::Error| e.to_string())
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    scalar::parse(s).map_err(|e| e.to_string())
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invstab::iteration::DEFAULT_DEGREE_CAP;

/// Decide inverse stability of X^p - X + xi over finite fields.
#[derive(Parser, Debug)]
#[command(name = "invstab", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide one xi and print the verdict.
    Check {
        #[command(flatten)]
        field: FieldArgs,
        /// Field element, e.g. `0,1` for w or a bare integer for prime fields
        #[arg(long)]
        xi: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide every xi of the field.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the denominator D_n of the n-th iterate.
    Generate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        xi: String,
        #[arg(long)]
        n: usize,
        /// Largest admissible degree p^n
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: u128,
        /// Confirm irreducibility with the Rabin test as well
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run brute-force cross-checks over the field.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// criterion, minpoly, reciprocal, mobius, artin-schreier, iterates, wan, agou, or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: u128,
        /// Random samples for the sampling suites
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print (n, a_n, c_n, d_n, a_n/c_n, Tr) for n = 1..=nmax.
    TraceTable {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        xi: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// Characteristic
    #[arg(long)]
    pub p: u64,
    /// Extension degree over F_p
    #[arg(long, default_value_t = 1)]
    pub e: usize,
    /// Monic modulus over F_p, constant term first, e.g. `2,2,1`
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Suppress everything on standard error except errors
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

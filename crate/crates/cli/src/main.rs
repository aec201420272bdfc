mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use invstab::oracle::SuiteConfig;

use args::{Cli, Command};

pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] invstab::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { field, xi, out } => commands::check(&field, &xi, &out),
        Command::Search { field, out } => commands::search(&field, &out),
        Command::Generate {
            field,
            xi,
            n,
            cap,
            verify,
            out,
        } => commands::generate(&field, &xi, n, cap, verify, &out),
        Command::Verify {
            field,
            suite,
            nmax,
            cap,
            samples,
            seed,
            out,
        } => {
            let cfg = SuiteConfig {
                n_max: nmax,
                cap,
                samples,
                seed,
            };
            commands::verify(&field, &suite, cfg, &out)
        }
        Command::TraceTable {
            field,
            xi,
            nmax,
            out,
        } => commands::trace_table_cmd(&field, &xi, nmax, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

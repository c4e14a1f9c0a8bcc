//! `splitq` — scenario-driven front end for the hypercomplex mechanics
//! library: trajectory simulation, two-level spectra, phase-diagram sweeps,
//! and a deterministic self-check suite.
//!
//! Exit codes are a stable contract:
//!
//! | code | meaning                                  |
//! |------|------------------------------------------|
//! | 0    | success                                  |
//! | 1    | self-check failure                       |
//! | 2    | argument, schema, or config errors       |
//! | 3    | integration / runtime errors             |
//! | 4    | sweep grid exceeds the size guard        |

mod scenario;
mod spectrum;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use splitq::selfcheck::FaultInjection;
use thiserror::Error;

/// Command-level failure, tagged by which exit code it maps to. Error
/// messages name the offending field or constraint.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable input, schema violations, bad config: exit 2.
    #[error("{0}")]
    Schema(String),
    /// Failures while integrating or writing results: exit 3.
    #[error("{0}")]
    Integration(String),
    /// Sweep grid larger than the hard ceiling: exit 4.
    #[error("{0}")]
    Guard(String),
    /// A self-check property failed: exit 1.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Integration(_) => 3,
            CliError::Guard(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "splitq",
    version,
    about = "Hypercomplex mechanics: simulate flows, report spectra, sweep phase diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a scenario file and write the trajectory
    Simulate {
        /// Scenario JSON file
        file: PathBuf,
        /// Destination path (overrides the scenario's "output" field)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Output format (overrides the scenario's "format" field)
        #[arg(long, value_enum)]
        format: Option<scenario::Format>,
    },
    /// Print eigenvalues, spectral phase, and mode fixed-point classes
    Spectrum(spectrum::SpectrumArgs),
    /// Evaluate the two-level spectrum over a parameter grid
    Sweep {
        /// Sweep JSON file
        file: PathBuf,
        /// Destination path (overrides the sweep's "output" field)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the deterministic algebra and flow property suite
    Selfcheck {
        /// Test hook: corrupt the named component before running
        #[arg(long, hide = true, value_name = "NAME")]
        inject_fault: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate {
            file,
            output,
            format,
        } => scenario::run(&file, output, format),
        Command::Spectrum(args) => spectrum::run(&args),
        Command::Sweep { file, output } => sweep::run(&file, output),
        Command::Selfcheck { inject_fault } => run_selfcheck(inject_fault.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run_selfcheck(inject: Option<&str>) -> Result<(), CliError> {
    let faults = match inject {
        None => FaultInjection::default(),
        Some("mul-table") => FaultInjection {
            corrupt_mul_table: true,
        },
        Some(other) => {
            return Err(CliError::Schema(format!(
                "--inject-fault: unknown fault \"{other}\""
            )))
        }
    };
    match splitq::selfcheck::run(&faults) {
        Ok(passed) => {
            for name in passed {
                println!("ok {name}");
            }
            Ok(())
        }
        Err(failure) => Err(CliError::Check(failure.to_string())),
    }
}

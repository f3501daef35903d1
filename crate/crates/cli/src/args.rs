use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critpoints::{EnumerateOptions, Symmetry, Tolerances};

/// Critical points of the linear entanglement entropy of L-qubit states.
#[derive(Debug, Parser)]
#[command(name = "critpoints", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the critical points for L qubits.
    Enumerate {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, env = "CRITPOINTS_RAW")]
        /// Keep the (1/2, ..., 1/2, 0) pattern.
        raw: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build and verify one critical state per critical point.
    States {
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutputArgs,
        #[command(flatten)]
        tol: ToleranceArgs,
    },
    /// Verify a state file, or every state of a `states` JSON document.
    Verify {
        #[arg(long, env = "CRITPOINTS_INPUT")]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
        #[command(flatten)]
        tol: ToleranceArgs,
    },
    /// Extend a level-L results file to level-L+1 candidates.
    Extend {
        #[arg(long, env = "CRITPOINTS_INPUT")]
        input: PathBuf,
        /// Check the candidates against a raw enumeration at level L+1.
        #[arg(long, env = "CRITPOINTS_CHECK")]
        check: bool,
        #[arg(long, value_enum, default_value_t = SymmetryArg::On, env = "CRITPOINTS_SYMMETRY")]
        symmetry: SymmetryArg,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..), env = "CRITPOINTS_WORKERS")]
        workers: u16,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Time an enumeration and report search statistics.
    Bench {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, env = "CRITPOINTS_RAW")]
        raw: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of qubits.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8), env = "CRITPOINTS_QUBITS")]
    pub qubits: u8,
    #[arg(long, value_enum, default_value_t = SymmetryArg::On, env = "CRITPOINTS_SYMMETRY")]
    pub symmetry: SymmetryArg,
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..), env = "CRITPOINTS_WORKERS")]
    pub workers: u16,
}

impl SearchArgs {
    pub fn options(&self, raw: bool) -> EnumerateOptions {
        EnumerateOptions {
            symmetry: self.symmetry.into(),
            raw,
            workers: self.workers.into(),
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table, env = "CRITPOINTS_FORMAT")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, env = "CRITPOINTS_OUTPUT")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Bound for value agreement and the eigen-equation residual.
    #[arg(long, value_parser = positive_f64, env = "CRITPOINTS_TOLERANCE")]
    pub tolerance: Option<f64>,
}

impl ToleranceArgs {
    pub fn tolerances(&self) -> Tolerances {
        self.tolerance
            .map_or_else(Tolerances::default, Tolerances::with_bound)
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    On,
    Off,
}

impl From<SymmetryArg> for Symmetry {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::On => Symmetry::On,
            SymmetryArg::Off => Symmetry::Off,
        }
    }
}

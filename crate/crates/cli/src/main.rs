mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate { search, raw, out } => commands::cmd_enumerate(&search, raw, &out),
        Command::States { search, out, tol } => {
            commands::cmd_states(&search, &out, &tol.tolerances())
        }
        Command::Verify { input, out, tol } => {
            commands::cmd_verify(&input, &out, &tol.tolerances())
        }
        Command::Extend {
            input,
            check,
            symmetry,
            workers,
            out,
        } => commands::cmd_extend(&input, check, symmetry, workers, &out),
        Command::Bench { search, raw, out } => commands::cmd_bench(&search, raw, &out),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

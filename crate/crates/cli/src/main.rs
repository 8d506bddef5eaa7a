use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use jhankel_cli::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}

//! Binary entry point: parse, execute, print, set the exit status.

use clap::Parser;

use equimatch_cli::args::Cli;
use equimatch_cli::run::{execute, Outcome, UsageError};

fn main() {
    match execute(Cli::parse()) {
        Ok(Outcome::Success(document)) => println!("{document}"),
        Ok(Outcome::VerifyFailed(document)) => {
            println!("{document}");
            std::process::exit(1);
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

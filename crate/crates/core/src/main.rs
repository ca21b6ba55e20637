use std::process::ExitCode;

use clap::Parser;
use rectgen::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rectgen: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

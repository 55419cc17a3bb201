use std::process::ExitCode;

use clap::Parser;
use dichroma_cli::{run, Cli};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&argv);
    match run(&cli, &argv) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dichroma: {e}");
            ExitCode::from(2)
        }
    }
}

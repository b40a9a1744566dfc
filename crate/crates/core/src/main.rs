use std::process::ExitCode;

use clap::Parser;
use nlie::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let mut code = outcome.code;
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, outcome.report_text()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            code = 2;
        }
    }
    if outcome.code == 2 {
        eprintln!("{}", outcome.summary);
    } else if !cli.quiet {
        println!("{}", outcome.summary);
    }
    ExitCode::from(code as u8)
}

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use zeroset_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let outcome = match run(&cli, &mut stdin.lock()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("zeroset: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = outcome.render();
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("zeroset: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.status as u8)
}

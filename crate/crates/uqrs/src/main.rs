use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use uqrs::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize");
    text.push('\n');
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code())
}

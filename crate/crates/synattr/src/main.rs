use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use synattr::cli::{run, Cli, EXIT_FATAL};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FATAL } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((output, dest)) => {
            let written = match dest {
                Some(path) => fs::write(&path, &output.report),
                None => io::stdout().lock().write_all(output.report.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: writing report: {e}");
                return ExitCode::from(EXIT_FATAL);
            }
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(output.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FATAL)
        }
    }
}

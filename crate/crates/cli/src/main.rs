use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfkit::{Args, CliError, EXIT_ERROR};

fn main() -> ExitCode {
    let args = Args::parse();
    match hopfkit::run(&args) {
        Ok((text, code)) => {
            let written = match &args.report {
                Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source }),
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
            };
            match written {
                Ok(()) => ExitCode::from(code as u8),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_ERROR as u8)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

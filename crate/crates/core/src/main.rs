// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hompoly::cli::{run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(text, outcome)| {
        match &cli.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(outcome)
    });
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hompoly: {e}");
            ExitCode::from(2)
        }
    }
}

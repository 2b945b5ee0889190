use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use zhelobenko::{exit_code, render, run::run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<i32> {
    let report = run(cli)?;
    let text = render(&report, cli.output.output);
    match &cli.output.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(exit_code(&report))
}

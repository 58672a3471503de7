//! `trapredund`: bounds on trapping redundancy, code construction, and
//! trapping-set audits from the command line.

mod args;
mod commands;
mod error;
mod output;
mod source;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

const THREADS_ENV: &str = "TRAPREDUND_THREADS";

fn init_threads(flag: Option<usize>) -> Result<(), CliError> {
    let env = std::env::var(THREADS_ENV).ok();
    let n = match (flag, env) {
        (Some(n), _) => Some(n),
        (None, Some(s)) => Some(
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{THREADS_ENV}={s:?} is not a thread count")))?,
        ),
        (None, None) => None,
    };
    if let Some(n) = n {
        if n == 0 {
            return Err(CliError::Usage("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    init_threads(cli.global.threads)?;
    match &cli.command {
        Command::Bounds(a) => commands::bounds::run(&cli.global, a),
        Command::Construct(a) => commands::construct::run(&cli.global, a),
        Command::Audit(a) => commands::audit::run(&cli.global, a),
        Command::Sample(a) => commands::sample::run(&cli.global, a),
        Command::Break(a) => commands::brk::run(&cli.global, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `gft`: command-line front end for gft-core.
//!
//! Exit codes: 0 success (or the checked property holds), 1 verification
//! failure, 2 usage or parse error, 3 numerical precondition failure.

mod args;
mod commands;
mod io;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("gft: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(outcome) => ExitCode::from(outcome as u8),
        Err(e) => {
            eprintln!("gft: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use config::RunConfig;
use error::CliError;

fn run(cli: &Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::resolve(&cli.flags)?;
    let outcome = match &cli.command {
        Command::Verify { suite } => commands::verify(&cfg, suite)?,
        Command::Precess => commands::precess(&cfg)?,
        Command::Harmonics => commands::harmonics(&cfg)?,
        Command::FreeParticle => commands::free_particle(&cfg)?,
    };
    output::emit(cfg.out.as_deref(), &outcome.bytes)?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hqm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

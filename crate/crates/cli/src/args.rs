use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hqm",
    version,
    about = "Quaternionic quantum mechanics: verification suites, precession traces and harmonic tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suites and emit a report.
    Verify {
        /// algebra, waves, angular, spin or all.
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Write a spin precession trace from the closed-form solutions.
    Precess,
    /// Tabulate a quaternionic spherical harmonic.
    Harmonics,
    /// Report derivative eigen-residuals of a Λ function at two resolutions.
    FreeParticle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    L1,
    L2,
    L3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EtaChoice {
    /// η = i
    I,
    /// η = e^{i(α−β)} j
    Jphase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Every flag is optional so that config-file values can fill the gaps.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Precession case.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub case: Option<u8>,
    /// Case-1 mixing angle θ; also θ₀ for Λ₁/Λ₂.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Γ₀ for Λ₃.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub gamma0: Option<f64>,
    /// Ω₀ for Λ₃.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub omega0: Option<f64>,
    #[arg(long, global = true)]
    pub ell: Option<u32>,
    /// Wavenumber (harmonics require an integer).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub m: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub variant: Option<Variant>,
    /// Right unit used by `precess --integrate`.
    #[arg(long, global = true, value_enum)]
    pub eta: Option<EtaChoice>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub b0: Option<f64>,
    #[arg(long = "t-max", global = true, allow_negative_numbers = true)]
    pub t_max: Option<f64>,
    #[arg(long, global = true)]
    pub steps: Option<usize>,
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Tolerance override `<check>=<value>`; repeatable.
    #[arg(long, global = true, value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add RK4 columns to the precession trace.
    #[arg(long, global = true)]
    pub integrate: bool,
}

pub fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected <name>=<value>, got '{s}'"))?;
    let v: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("invalid tolerance '{value}'"))?;
    Ok((name.trim().to_string(), v))
}

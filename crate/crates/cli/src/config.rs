//! Run configuration layered as CLI flags > config file > defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::args::{parse_tol, EtaChoice, Flags, Format, Variant};
use crate::error::CliError;

pub const CONFIG_ENV: &str = "HQM_CONFIG";

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub case: u8,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma0: f64,
    pub omega0: f64,
    pub ell: u32,
    pub m: f64,
    pub variant: Variant,
    pub eta: Option<EtaChoice>,
    pub hbar: f64,
    pub gamma: f64,
    pub b0: f64,
    pub t_max: Option<f64>,
    pub steps: Option<usize>,
    pub grid: Option<usize>,
    pub tol: BTreeMap<String, f64>,
    pub seed: u64,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub integrate: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            case: 1,
            theta: 0.0,
            alpha: std::f64::consts::FRAC_PI_2,
            beta: 0.0,
            gamma0: 0.0,
            omega0: 0.0,
            ell: 2,
            m: 1.0,
            variant: Variant::L1,
            eta: None,
            hbar: 1.0,
            gamma: 1.0,
            b0: 1.0,
            t_max: None,
            steps: None,
            grid: None,
            tol: BTreeMap::new(),
            seed: 0x5eed,
            format: None,
            out: None,
            integrate: false,
        }
    }
}

impl RunConfig {
    /// Defaults, then the file named by `HQM_CONFIG` (if set), then `flags`.
    pub fn resolve(flags: &Flags) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = std::env::var_os(CONFIG_ENV) {
            let file = load_file(Path::new(&path))?;
            cfg.apply(&file);
        }
        cfg.apply(flags);
        Ok(cfg)
    }

    fn apply(&mut self, f: &Flags) {
        macro_rules! take {
            ($($field:ident),*) => { $( if let Some(v) = f.$field { self.$field = v; } )* };
        }
        take!(case, theta, alpha, beta, gamma0, omega0, ell, m, variant, hbar, gamma, b0, seed);
        if f.eta.is_some() {
            self.eta = f.eta;
        }
        if f.t_max.is_some() {
            self.t_max = f.t_max;
        }
        if f.steps.is_some() {
            self.steps = f.steps;
        }
        if f.grid.is_some() {
            self.grid = f.grid;
        }
        if f.format.is_some() {
            self.format = f.format;
        }
        if f.out.is_some() {
            self.out.clone_from(&f.out);
        }
        self.integrate |= f.integrate;
        for (k, v) in &f.tol {
            self.tol.insert(k.clone(), *v);
        }
    }
}

fn load_file(path: &Path) -> Result<Flags, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&text)
}

fn bad(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("config line {line}: {msg}"))
}

fn num<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T, CliError> {
    v.parse()
        .map_err(|_| bad(line, format!("invalid value '{v}' for {key}")))
}

fn choice<T: ValueEnum>(line: usize, key: &str, v: &str) -> Result<T, CliError> {
    T::from_str(v, true).map_err(|_| bad(line, format!("invalid value '{v}' for {key}")))
}

/// Parses `key = value` lines. Blank lines and lines starting with `#` are
/// skipped; keys are the long flag names.
pub fn parse_config(text: &str) -> Result<Flags, CliError> {
    let mut f = Flags::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let (key, value) = s.split_once('=').ok_or_else(|| bad(line, "expected key = value"))?;
        let (key, v) = (key.trim(), value.trim());
        match key {
            "case" => {
                let c: u8 = num(line, key, v)?;
                if !(1..=2).contains(&c) {
                    return Err(bad(line, "case must be 1 or 2"));
                }
                f.case = Some(c);
            }
            "theta" => f.theta = Some(num(line, key, v)?),
            "alpha" => f.alpha = Some(num(line, key, v)?),
            "beta" => f.beta = Some(num(line, key, v)?),
            "gamma0" => f.gamma0 = Some(num(line, key, v)?),
            "omega0" => f.omega0 = Some(num(line, key, v)?),
            "ell" => f.ell = Some(num(line, key, v)?),
            "m" => f.m = Some(num(line, key, v)?),
            "variant" => f.variant = Some(choice(line, key, v)?),
            "eta" => f.eta = Some(choice(line, key, v)?),
            "hbar" => f.hbar = Some(num(line, key, v)?),
            "gamma" => f.gamma = Some(num(line, key, v)?),
            "b0" => f.b0 = Some(num(line, key, v)?),
            "t-max" | "t_max" => f.t_max = Some(num(line, key, v)?),
            "steps" => f.steps = Some(num(line, key, v)?),
            "grid" => f.grid = Some(num(line, key, v)?),
            "tol" => f.tol.push(parse_tol(v).map_err(|e| bad(line, e))?),
            "seed" => f.seed = Some(num(line, key, v)?),
            "format" => f.format = Some(choice(line, key, v)?),
            "out" => f.out = Some(PathBuf::from(v)),
            "integrate" => f.integrate = num(line, key, v)?,
            other => return Err(bad(line, format!("unknown key '{other}'"))),
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_layers() {
        let file = parse_config("# comment\nhbar = 2\n\nvariant = l3\ntol = spin.case1_norm=1e-9\nintegrate = true\n")
            .unwrap();
        let mut cfg = RunConfig::default();
        cfg.apply(&file);
        assert_eq!(cfg.hbar, 2.0);
        assert_eq!(cfg.variant, Variant::L3);
        assert!(cfg.integrate);
        let cli = Flags {
            hbar: Some(3.0),
            ..Flags::default()
        };
        cfg.apply(&cli);
        assert_eq!(cfg.hbar, 3.0);
        assert_eq!(cfg.variant, Variant::L3);
        assert_eq!(cfg.tol["spin.case1_norm"], 1e-9);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(parse_config("colour = red"), Err(CliError::Usage(_))));
        assert!(matches!(parse_config("hbar = x"), Err(CliError::Usage(_))));
        assert!(matches!(parse_config("case = 3"), Err(CliError::Usage(_))));
        assert!(matches!(parse_config("no equals sign"), Err(CliError::Usage(_))));
    }
}

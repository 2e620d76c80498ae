//! The verification suites behind `hqm verify`.
//!
//! Every check has a fixed name, a formula tag, a measured residual and a
//! tolerance; a check passes when `residual ≤ tolerance` (NaN never passes).
//! All randomized inputs are drawn sequentially from one seeded ChaCha
//! stream per suite, so a seed fully determines the report.

mod algebra;
mod angular;
mod spin;
mod waves;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::spin::larmor::LarmorConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Algebra,
    Waves,
    Angular,
    Spin,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 4] = [
        SuiteKind::Algebra,
        SuiteKind::Waves,
        SuiteKind::Angular,
        SuiteKind::Spin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Algebra => "algebra",
            SuiteKind::Waves => "waves",
            SuiteKind::Angular => "angular",
            SuiteKind::Spin => "spin",
        }
    }

    fn seed_offset(self) -> u64 {
        self as u64
    }
}

/// A suite selection: one suite or all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Suite {
    #[default]
    All,
    One(SuiteKind),
}

impl Suite {
    pub fn kinds(self) -> Vec<SuiteKind> {
        match self {
            Suite::All => SuiteKind::ALL.to_vec(),
            Suite::One(k) => vec![k],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::One(k) => k.name(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            other => SuiteKind::ALL
                .into_iter()
                .find(|k| k.name() == other)
                .map(Suite::One)
                .ok_or_else(|| Error::Domain(format!("unknown suite '{other}'"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A registered check: name, owning suite and the relation it verifies.
#[derive(Debug, Clone, Copy)]
pub struct CheckDef {
    pub name: &'static str,
    pub suite: SuiteKind,
    pub formula: &'static str,
}

const fn def(name: &'static str, suite: SuiteKind, formula: &'static str) -> CheckDef {
    CheckDef { name, suite, formula }
}

use SuiteKind::{Algebra as A, Angular as G, Spin as S, Waves as W};

/// Every check, in report order.
pub const REGISTRY: &[CheckDef] = &[
    def("algebra.basis_table", A, "i² = j² = k² = ijk = −1"),
    def("algebra.associativity", A, "(pq)r = p(qr)"),
    def("algebra.norm_multiplicative", A, "|pq| = |p||q|"),
    def("algebra.matrix_oracle", A, "M(pq) = M(p)M(q)"),
    def("algebra.phased_j_identity", A, "e^{iδ}j = j e^{−iδ}"),
    def("algebra.barred_real_linear", A, "(A|η)(αa + βb) = α(A|η)a + β(A|η)b"),
    def("algebra.spin_commutator_i", A, "[S_a, S_b] = ħε_abc(S_c|η), η = i"),
    def(
        "algebra.spin_commutator_jphase",
        A,
        "[S_a, S_b] = ħε_abc(S_c|η), η = e^{iδ}j",
    ),
    def("algebra.spin_casimir", A, "[S², S_a] = 0"),
    def("waves.first_derivative_bound", W, "dΛ/dx = μΛ, Λμ; residual ≤ |m|³h²/6"),
    def("waves.first_derivative_order", W, "dΛ/dx residual order 2"),
    def("waves.second_derivative_bound", W, "d²Λ/dx² = −m²Λ; residual ≤ m⁴h²/12"),
    def("waves.second_derivative_order", W, "d²Λ/dx² residual order 2"),
    def("waves.harmonic_normalization", W, "∫ |𝓨_ℓ^m|² dΩ = 1"),
    def("waves.harmonic_orthogonality", W, "∫ Re[𝓨† 𝓨'] dΩ = 0"),
    def("waves.complex_limit_jk", W, "θ₀ = 0: 𝓨 has no j, k parts"),
    def("waves.complex_limit_standard", W, "θ₀ = 0: 𝓨_ℓ^m = Y_ℓ^m"),
    def("angular.l3_eigen", G, "L₃𝓨 = ħm𝓨; residual ≤ ħ|m|³h²/6 max|𝓨|"),
    def("angular.l3_order", G, "L₃ residual order 2"),
    def("angular.l2_eigen", G, "L²𝓨 = ħ²ℓ(ℓ+1)𝓨"),
    def("angular.l2_l3_commute", G, "[L², L₃] = 0"),
    def("angular.orbital_i", G, "[L₁, L₂] = ħ(L₃|η), η = i; residual ≤ Ch²"),
    def(
        "angular.orbital_jphase",
        G,
        "[L₂, L₃] = ħ(L₁|η), η = e^{iδ}j; residual ≤ Ch²",
    ),
    def("angular.orbital_order", G, "[L_a, L_b] residual order 2"),
    def("spin.case1_norm", S, "|Ψ₁(t)| = 1"),
    def("spin.case1_expectations", S, "⟨S⟩ = (ħ/2)(A cos ωt, A sin ωt, B)"),
    def("spin.case1_axis_second_moment", S, "⟨S_a²⟩ = ħ²/4"),
    def(
        "spin.case1_mean_square",
        S,
        "Σ⟨S_a⟩² = ħ²/4[cos⁴θ + sin⁴θ + 2sin²θcos²θcos(α−β)]",
    ),
    def("spin.case1_sigma", S, "σ_S = (ħ/2)|sin2θ sin((α−β)/2)|"),
    def("spin.case1_limits", S, "θ = 0 or α = β: complex Larmor result, σ_S = 0"),
    def("spin.case1_sigma_peak", S, "argmax_θ σ_S = π/4"),
    def("spin.case1_schrodinger", S, "ħ∂ₜΨη = 𝓗Ψ, η = i"),
    def("spin.case1_rk4_error", S, "RK4 vs Ψ₁(t)"),
    def("spin.case1_rk4_order", S, "RK4 error ratio 16 on step halving"),
    def("spin.case1_rk4_norm", S, "RK4 norm drift"),
    def("spin.case2_norm", S, "|Ψ₂(t)| = 1"),
    def("spin.case2_expectations", S, "⟨S₁⟩ = ⟨S₂⟩ = ⟨S₃⟩ = 0"),
    def("spin.case2_total_spin", S, "⟨S²⟩ = 3ħ²/4"),
    def("spin.case2_schrodinger", S, "ħ∂ₜΨη = 𝓗Ψ, η = e^{i(α−β)}j"),
    def("spin.case2_rk4_error", S, "RK4 vs Ψ₂(t)"),
    def("spin.case2_rk4_order", S, "RK4 error ratio 16 on step halving"),
    def("spin.case2_rk4_norm", S, "RK4 norm drift"),
];

pub fn lookup(name: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|d| d.name == name)
}

/// Knobs for a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub larmor: LarmorConfig,
    /// Samples per period on the coarse Λ grid (fine grid is twice this).
    pub grid: usize,
    pub theta_nodes: usize,
    pub phi_nodes: usize,
    /// Points per axis on the coarse orbital cube.
    pub cube: usize,
    pub rk4_steps: usize,
    /// Coarse step count of the RK4 order study.
    pub rk4_order_steps: usize,
    pub algebra_samples: usize,
    pub spin_samples: usize,
    pub eta_samples: usize,
    pub ell_max: u32,
    /// Constant `C` in the orbital bound `C·h²`.
    pub orbital_c: f64,
    pub tolerances: BTreeMap<String, f64>,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0x5eed,
            larmor: LarmorConfig::default(),
            grid: 256,
            theta_nodes: 64,
            phi_nodes: 256,
            cube: 32,
            rk4_steps: 10_000,
            rk4_order_steps: 128,
            algebra_samples: 10_000,
            spin_samples: 1000,
            eta_samples: 20,
            ell_max: 4,
            orbital_c: 0.5,
            tolerances: BTreeMap::new(),
            exec: Exec::default(),
        }
    }
}

impl VerifyConfig {
    /// Rejects tolerance overrides that name no registered check.
    pub fn validate(&self) -> Result<()> {
        for name in self.tolerances.keys() {
            if lookup(name).is_none() {
                return Err(Error::Domain(format!("unknown check '{name}' in tolerance override")));
            }
        }
        Ok(())
    }

    fn rng(&self, kind: SuiteKind) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(kind.seed_offset()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_eq: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

/// A raw measurement from a suite runner.
pub(crate) struct Measured {
    name: &'static str,
    residual: f64,
    tolerance: f64,
}

pub(crate) fn measured(name: &'static str, residual: f64, tolerance: f64) -> Measured {
    debug_assert!(lookup(name).is_some(), "unregistered check {name}");
    Measured {
        name,
        residual,
        tolerance,
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        w.write_record(["name", "paper_eq", "residual", "tolerance", "pass"])
            .map_err(|e| Error::Io(e.to_string()))?;
        for c in &self.checks {
            w.write_record([
                c.name.clone(),
                c.paper_eq.clone(),
                c.residual.to_string(),
                c.tolerance.to_string(),
                c.pass.to_string(),
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs the selected suites and assembles the report.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    cfg.validate()?;
    let mut checks = Vec::new();
    for kind in suite.kinds() {
        let mut rng = cfg.rng(kind);
        log::info!("running {} suite", kind.name());
        let raw = match kind {
            SuiteKind::Algebra => algebra::run(cfg, &mut rng)?,
            SuiteKind::Waves => waves::run(cfg, &mut rng)?,
            SuiteKind::Angular => angular::run(cfg, &mut rng)?,
            SuiteKind::Spin => spin::run(cfg, &mut rng)?,
        };
        for m in raw {
            let d = lookup(m.name).expect("registered");
            let tolerance = cfg.tolerances.get(m.name).copied().unwrap_or(m.tolerance);
            checks.push(Check {
                name: m.name.to_string(),
                paper_eq: d.formula.to_string(),
                residual: m.residual,
                tolerance,
                pass: m.residual <= tolerance,
            });
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        suite: suite.name().to_string(),
        checks,
        all_pass,
    })
}

/// `|observed − target|`, NaN-preserving.
pub(crate) fn miss(observed: f64, target: f64) -> f64 {
    (observed - target).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_prefixed() {
        let mut seen = std::collections::BTreeSet::new();
        for d in REGISTRY {
            assert!(seen.insert(d.name), "duplicate {}", d.name);
            assert!(d.name.starts_with(d.suite.name()));
        }
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("spin".parse::<Suite>().unwrap(), Suite::One(SuiteKind::Spin));
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn unknown_override_rejected() {
        let mut cfg = VerifyConfig::default();
        cfg.tolerances.insert("algebra.nope".into(), 1.0);
        assert!(matches!(
            run(Suite::One(SuiteKind::Algebra), &cfg),
            Err(Error::Domain(_))
        ));
    }
}

use std::f64::consts::TAU;

use serde::Serialize;

use hqm::angular::sphere::SphereGrid;
use hqm::spin::{
    case2_eta, evolve_rk4_trajectory, expectations_case1, expectations_case2, hamiltonian, psi_case1, psi_case2,
    Case1State, Case2State, LarmorConfig,
};
use hqm::suite::{self, Suite, VerifyConfig};
use hqm::waves::eigen::{convergence_study, EigenResiduals};
use hqm::waves::grid::DEFAULT_SAMPLES;
use hqm::waves::harmonic::{AzimuthalFactor, SphericalHarmonicSpec};
use hqm::waves::lambda::LambdaSpec;
use hqm::waves::quadrature::GaussLegendre;
use hqm::{ImaginaryUnit, QSpinor};

use crate::args::{EtaChoice, Format, Variant};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{csv_err, csv_writer, finish_csv};

/// Largest ℓ accepted by `harmonics`.
pub const MAX_ELL: u32 = 8;
/// Default time samples of a precession trace.
pub const DEFAULT_TRACE_STEPS: usize = 10_000;
/// Default azimuthal count of a harmonics table (θ uses half as many nodes).
pub const DEFAULT_TABLE_GRID: usize = 32;

pub struct Outcome {
    pub bytes: Vec<u8>,
    pub pass: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn larmor(cfg: &RunConfig) -> Result<LarmorConfig, CliError> {
    let l = LarmorConfig::new(cfg.gamma, cfg.b0, cfg.hbar);
    if !l.hbar.is_finite() || l.hbar <= 0.0 {
        return Err(usage("--hbar must be positive"));
    }
    Ok(l)
}

fn json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

pub fn verify(cfg: &RunConfig, suite_name: &str) -> Result<Outcome, CliError> {
    let suite: Suite = suite_name.parse().map_err(|e: hqm::Error| usage(e.to_string()))?;
    let defaults = VerifyConfig::default();
    let vc = VerifyConfig {
        seed: cfg.seed,
        larmor: larmor(cfg)?,
        grid: cfg.grid.unwrap_or(defaults.grid),
        rk4_steps: cfg.steps.unwrap_or(defaults.rk4_steps),
        tolerances: cfg.tol.clone(),
        ..defaults
    };
    if vc.larmor.omega() == 0.0 {
        return Err(usage("gamma·b0 must be nonzero for the spin suite"));
    }
    let report = suite::run(suite, &vc)?;
    for c in report.failed() {
        log::warn!(
            "check {} failed: residual {:e} > tolerance {:e}",
            c.name,
            c.residual,
            c.tolerance
        );
    }
    let bytes = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json().into_bytes(),
        Format::Csv => report.to_csv()?.into_bytes(),
    };
    Ok(Outcome {
        bytes,
        pass: report.all_pass,
    })
}

#[derive(Serialize)]
struct TraceRow {
    t: f64,
    #[serde(rename = "S1")]
    s1: f64,
    #[serde(rename = "S2")]
    s2: f64,
    #[serde(rename = "S3")]
    s3: f64,
    norm: f64,
    #[serde(rename = "S_sq", skip_serializing_if = "Option::is_none")]
    s_sq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rk4_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rk4_deviation: Option<f64>,
}

pub fn precess(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let l = larmor(cfg)?;
    if l.omega() == 0.0 {
        return Err(usage("gamma·b0 must be nonzero"));
    }
    let t_max = cfg.t_max.unwrap_or_else(|| l.two_periods());
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(usage(format!("invalid time range: t-max = {t_max}")));
    }
    let steps = cfg.steps.unwrap_or(DEFAULT_TRACE_STEPS);
    if steps == 0 {
        return Err(usage("--steps must be positive"));
    }

    let s1 = Case1State {
        theta: cfg.theta,
        alpha: cfg.alpha,
        beta: cfg.beta,
    };
    let s2 = Case2State {
        alpha: cfg.alpha,
        beta: cfg.beta,
    };
    let exact = |t: f64| -> QSpinor {
        if cfg.case == 1 {
            psi_case1(&s1, &l, t)
        } else {
            psi_case2(&s2, &l, t)
        }
    };
    let eta = match cfg
        .eta
        .unwrap_or(if cfg.case == 1 { EtaChoice::I } else { EtaChoice::Jphase })
    {
        EtaChoice::I => ImaginaryUnit::i(),
        EtaChoice::Jphase => case2_eta(&s2),
    };
    let rk4 = if cfg.integrate {
        Some(evolve_rk4_trajectory(
            &exact(0.0),
            &hamiltonian(&l),
            eta,
            &l,
            t_max,
            steps,
        )?)
    } else {
        None
    };

    let rows: Vec<TraceRow> = (0..=steps)
        .map(|k| {
            let t = t_max * k as f64 / steps as f64;
            let psi = exact(t);
            let (s, s_sq) = if cfg.case == 1 {
                (expectations_case1(&s1, &l, t), None)
            } else {
                let e = expectations_case2(&s2, &l, t);
                ([e[0], e[1], e[2]], Some(e[3]))
            };
            let (rk4_norm, rk4_deviation) = match &rk4 {
                Some(traj) => (Some(traj[k].norm()), Some(traj[k].dist(&psi))),
                None => (None, None),
            };
            TraceRow {
                t,
                s1: s[0],
                s2: s[1],
                s3: s[2],
                norm: psi.norm(),
                s_sq,
                rk4_norm,
                rk4_deviation,
            }
        })
        .collect();

    let bytes = match cfg.format.unwrap_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv_writer();
            for r in &rows {
                w.serialize(r).map_err(csv_err)?;
            }
            finish_csv(w)?
        }
    };
    Ok(Outcome { bytes, pass: true })
}

#[derive(Serialize)]
struct HarmonicRow {
    theta: f64,
    phi: f64,
    w: f64,
    x_i: f64,
    y_j: f64,
    z_k: f64,
    normalization: f64,
}

pub fn harmonics(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.ell > MAX_ELL {
        return Err(usage(format!("ell = {} exceeds the table limit {MAX_ELL}", cfg.ell)));
    }
    if cfg.m.fract() != 0.0 {
        return Err(usage(format!("harmonics need an integer m, got {}", cfg.m)));
    }
    let factor = match cfg.variant {
        Variant::L2 => AzimuthalFactor::Lambda2 { theta0: cfg.theta },
        Variant::L3 => AzimuthalFactor::Lambda3 {
            gamma0: cfg.gamma0,
            omega0: cfg.omega0,
        },
        Variant::L1 => return Err(usage("harmonics use --variant l2 or l3")),
    };
    let m = cfg.m as i32;
    let spec = SphericalHarmonicSpec::new(cfg.ell, m, factor)?;

    let quad = SphereGrid::sample_harmonic(&spec, &GaussLegendre::new(64), 256);
    let normalization = quad.real_inner(&quad)?;

    let n_phi = cfg.grid.unwrap_or(DEFAULT_TABLE_GRID);
    if n_phi < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    let gl = GaussLegendre::new((n_phi / 2).max(1));
    let mut rows = Vec::with_capacity(gl.len() * n_phi);
    for &u in gl.nodes.iter().rev() {
        let theta = u.acos();
        for k in 0..n_phi {
            let phi = TAU * k as f64 / n_phi as f64;
            let y = spec.eval(theta, phi);
            rows.push(HarmonicRow {
                theta,
                phi,
                w: y.w,
                x_i: y.x,
                y_j: y.y,
                z_k: y.z,
                normalization,
            });
        }
    }
    let bytes = match cfg.format.unwrap_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv_writer();
            for r in &rows {
                w.serialize(r).map_err(csv_err)?;
            }
            finish_csv(w)?
        }
    };
    Ok(Outcome { bytes, pass: true })
}

#[derive(Serialize)]
struct FreeParticleReport {
    variant: &'static str,
    m: f64,
    coarse: EigenResiduals,
    fine: EigenResiduals,
    first_left_order: Option<f64>,
    first_right_order: Option<f64>,
    second_order: Option<f64>,
}

pub fn free_particle(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = match cfg.variant {
        Variant::L1 => LambdaSpec::lambda1(cfg.m, cfg.theta),
        Variant::L2 => LambdaSpec::lambda2(cfg.m, cfg.theta),
        Variant::L3 => LambdaSpec::lambda3(cfg.m, cfg.gamma0, cfg.omega0),
    };
    let study = convergence_study(&spec, cfg.grid.unwrap_or(DEFAULT_SAMPLES))?;
    let report = FreeParticleReport {
        variant: spec.variant.name(),
        m: cfg.m,
        coarse: study.coarse,
        fine: study.fine,
        first_left_order: study.first_left_order,
        first_right_order: study.first_right_order,
        second_order: study.second_order,
    };
    let bytes = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["quantity", "value"]).map_err(csv_err)?;
            let opt = |v: Option<f64>| v.map_or_else(String::new, |x| x.to_string());
            let mut rec = |k: &str, v: String| w.write_record([k, v.as_str()]).map_err(csv_err);
            rec("variant", report.variant.to_string())?;
            rec("m", report.m.to_string())?;
            for (tag, r) in [("coarse", &report.coarse), ("fine", &report.fine)] {
                rec(&format!("{tag}_samples"), r.samples.to_string())?;
                rec(&format!("{tag}_spacing"), r.spacing.to_string())?;
                rec(&format!("{tag}_first_left"), opt(r.first_left))?;
                rec(&format!("{tag}_first_right"), opt(r.first_right))?;
                rec(&format!("{tag}_second"), r.second.to_string())?;
            }
            rec("first_left_order", opt(report.first_left_order))?;
            rec("first_right_order", opt(report.first_right_order))?;
            rec("second_order", opt(report.second_order))?;
            finish_csv(w)?
        }
    };
    Ok(Outcome { bytes, pass: true })
}

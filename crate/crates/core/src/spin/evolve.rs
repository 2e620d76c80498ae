//! Classical RK4 for `ħ ∂ₜΨ η = 𝓗Ψ`, integrated as `∂ₜΨ = −(1/ħ)(𝓗Ψ)η`.

use crate::error::{Error, Result};
use crate::hilbert::{QMatrix, QSpinor};
use crate::quat::ImaginaryUnit;
use crate::spin::larmor::LarmorConfig;

/// Smallest accepted number of steps.
pub const MIN_STEPS: usize = 16;
/// Default number of steps.
pub const DEFAULT_STEPS: usize = 10_000;

fn validate(cfg: &LarmorConfig, steps: usize) -> Result<()> {
    if steps < MIN_STEPS {
        return Err(Error::Resolution(format!(
            "need at least {MIN_STEPS} steps, got {steps}"
        )));
    }
    if cfg.hbar.is_nan() || cfg.hbar <= 0.0 {
        return Err(Error::Domain(format!("hbar must be positive, got {}", cfg.hbar)));
    }
    Ok(())
}

fn rhs(h: &QMatrix, eta: ImaginaryUnit, hbar: f64, psi: &QSpinor) -> QSpinor {
    h.apply(psi).right_mul(eta.quat()) * (-1.0 / hbar)
}

fn step(h: &QMatrix, eta: ImaginaryUnit, hbar: f64, psi: &QSpinor, dt: f64) -> QSpinor {
    let k1 = rhs(h, eta, hbar, psi);
    let k2 = rhs(h, eta, hbar, &(*psi + k1 * (dt / 2.0)));
    let k3 = rhs(h, eta, hbar, &(*psi + k2 * (dt / 2.0)));
    let k4 = rhs(h, eta, hbar, &(*psi + k3 * dt));
    *psi + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)
}

/// State at `t_final` after `steps` equal steps from `t = 0`.
pub fn evolve_rk4(
    psi0: &QSpinor,
    h: &QMatrix,
    eta: ImaginaryUnit,
    cfg: &LarmorConfig,
    t_final: f64,
    steps: usize,
) -> Result<QSpinor> {
    validate(cfg, steps)?;
    let dt = t_final / steps as f64;
    let mut psi = *psi0;
    for _ in 0..steps {
        psi = step(h, eta, cfg.hbar, &psi, dt);
    }
    Ok(psi)
}

/// All `steps + 1` states, including `psi0`.
pub fn evolve_rk4_trajectory(
    psi0: &QSpinor,
    h: &QMatrix,
    eta: ImaginaryUnit,
    cfg: &LarmorConfig,
    t_final: f64,
    steps: usize,
) -> Result<Vec<QSpinor>> {
    validate(cfg, steps)?;
    let dt = t_final / steps as f64;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(*psi0);
    let mut psi = *psi0;
    for _ in 0..steps {
        psi = step(h, eta, cfg.hbar, &psi, dt);
        out.push(psi);
    }
    Ok(out)
}

/// Trajectory against an exact solution: worst state error and worst norm
/// drift over every step.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Deviation {
    pub max_error: f64,
    pub max_norm_drift: f64,
}

pub fn trajectory_deviation(
    exact: impl Fn(f64) -> QSpinor,
    h: &QMatrix,
    eta: ImaginaryUnit,
    cfg: &LarmorConfig,
    t_final: f64,
    steps: usize,
) -> Result<Deviation> {
    let psi0 = exact(0.0);
    let n0 = psi0.norm();
    let traj = evolve_rk4_trajectory(&psi0, h, eta, cfg, t_final, steps)?;
    let dt = t_final / steps as f64;
    let mut dev = Deviation {
        max_error: 0.0,
        max_norm_drift: 0.0,
    };
    for (k, psi) in traj.iter().enumerate() {
        dev.max_error = crate::exec::nan_max(dev.max_error, psi.dist(&exact(k as f64 * dt)));
        dev.max_norm_drift = crate::exec::nan_max(dev.max_norm_drift, (psi.norm() - n0).abs());
    }
    Ok(dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;
    use crate::spin::cases::{psi_case1, Case1State};
    use crate::spin::larmor::hamiltonian;

    #[test]
    fn zero_hamiltonian_is_identity() {
        let psi = QSpinor::new(Quaternion::new(0.1, 0.2, 0.3, 0.4), Quaternion::new(0.5, 0.6, 0.7, 0.8));
        let out = evolve_rk4(
            &psi,
            &QMatrix::zero(),
            ImaginaryUnit::i(),
            &LarmorConfig::default(),
            3.0,
            32,
        )
        .unwrap();
        assert_eq!(out, psi);
    }

    #[test]
    fn rejects_coarse_or_bad_hbar() {
        let psi = QSpinor::new(Quaternion::ONE, Quaternion::ZERO);
        let cfg = LarmorConfig::default();
        assert!(matches!(
            evolve_rk4(&psi, &QMatrix::zero(), ImaginaryUnit::i(), &cfg, 1.0, 15),
            Err(Error::Resolution(_))
        ));
        let bad = LarmorConfig { hbar: 0.0, ..cfg };
        assert!(matches!(
            evolve_rk4(&psi, &QMatrix::zero(), ImaginaryUnit::i(), &bad, 1.0, 16),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fourth_order_on_case1() {
        let cfg = LarmorConfig::default();
        let st = Case1State {
            theta: 0.5,
            alpha: 1.0,
            beta: 0.2,
        };
        let t = cfg.two_periods();
        let h = hamiltonian(&cfg);
        let e1 = trajectory_deviation(|t| psi_case1(&st, &cfg, t), &h, ImaginaryUnit::i(), &cfg, t, 64).unwrap();
        let e2 = trajectory_deviation(|t| psi_case1(&st, &cfg, t), &h, ImaginaryUnit::i(), &cfg, t, 128).unwrap();
        let ratio = e1.max_error / e2.max_error;
        assert!((ratio - 16.0).abs() < 2.0, "{ratio}");
    }
}

//! The two closed-form precession solutions and their moments.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hilbert::{expectation, NormPolicy, QMatrix, QSpinor};
use crate::quat::{ImaginaryUnit, Quaternion};
use crate::spin::larmor::{observables, LarmorConfig, SpinSquared, Squared};

/// Complex/quaternionic mixture with cone angles α (complex sector) and β
/// (quaternionic sector).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Case1State {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Case2State {
    pub alpha: f64,
    pub beta: f64,
}

/// `Ψ = cosθ (cos(α/2) e^{iEt/ħ}, sin(α/2) e^{−iEt/ħ})
///    + sinθ (cos(β/2) e^{−iEt/ħ}, sin(β/2) e^{iEt/ħ}) j`.
pub fn psi_case1(state: &Case1State, cfg: &LarmorConfig, t: f64) -> QSpinor {
    let Case1State { theta, alpha, beta } = *state;
    let ph = cfg.energy() * t / cfg.hbar;
    let (ct, st) = (theta.cos(), theta.sin());
    let plus = Quaternion::cis(ph);
    let minus = Quaternion::cis(-ph);
    let up = plus * (ct * (alpha / 2.0).cos()) + minus * Quaternion::J * (st * (beta / 2.0).cos());
    let down = minus * (ct * (alpha / 2.0).sin()) + plus * Quaternion::J * (st * (beta / 2.0).sin());
    QSpinor::new(up, down)
}

/// Closed-form `(⟨S₁⟩, ⟨S₂⟩, ⟨S₃⟩)` for case 1.
pub fn expectations_case1(state: &Case1State, cfg: &LarmorConfig, t: f64) -> [f64; 3] {
    let Case1State { theta, alpha, beta } = *state;
    let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
    let h = cfg.hbar / 2.0;
    let amp = c2 * alpha.sin() + s2 * beta.sin();
    let wt = cfg.omega() * t;
    [
        h * amp * wt.cos(),
        h * amp * wt.sin(),
        h * (c2 * alpha.cos() + s2 * beta.cos()),
    ]
}

/// `Σ_a ⟨S_a⟩² = ħ²/4 [cos⁴θ + sin⁴θ + 2 sin²θ cos²θ cos(α−β)]`.
pub fn mean_spin_sq_case1(state: &Case1State, hbar: f64) -> f64 {
    let (c2, s2) = (state.theta.cos().powi(2), state.theta.sin().powi(2));
    hbar * hbar / 4.0 * (c2 * c2 + s2 * s2 + 2.0 * s2 * c2 * (state.alpha - state.beta).cos())
}

/// `σ_S = (ħ/2)|sin 2θ · sin((α−β)/2)|`.
pub fn sigma_s(state: &Case1State, hbar: f64) -> f64 {
    hbar / 2.0 * ((2.0 * state.theta).sin() * ((state.alpha - state.beta) / 2.0).sin()).abs()
}

/// `Ψ = (e^{iα}/√2)(cos(ωt/2), sin(ωt/2)) + (e^{iβ}/√2)(−sin(ωt/2), cos(ωt/2)) j`.
pub fn psi_case2(state: &Case2State, cfg: &LarmorConfig, t: f64) -> QSpinor {
    let half = cfg.omega() * t / 2.0;
    let (c, s) = (half.cos(), half.sin());
    let a = Quaternion::cis(state.alpha) * FRAC_1_SQRT_2;
    let b = Quaternion::cis(state.beta) * Quaternion::J * FRAC_1_SQRT_2;
    QSpinor::new(a * c - b * s, a * s + b * c)
}

/// `(⟨S₁⟩, ⟨S₂⟩, ⟨S₃⟩, ⟨S²⟩) = (0, 0, 0, 3ħ²/4)`.
pub fn expectations_case2(_state: &Case2State, cfg: &LarmorConfig, _t: f64) -> [f64; 4] {
    [0.0, 0.0, 0.0, 0.75 * cfg.hbar * cfg.hbar]
}

/// `η = e^{i(α−β)} j` for case 2.
pub fn case2_eta(state: &Case2State) -> ImaginaryUnit {
    ImaginaryUnit::phased_j(state.alpha - state.beta)
}

/// `Re[Ψ† S_a Ψ]` for the three observables.
pub fn numeric_expectations(psi: &QSpinor, hbar: f64) -> Result<[f64; 3]> {
    let s = observables(hbar);
    Ok([
        expectation(&s[0], psi, NormPolicy::Fail)?,
        expectation(&s[1], psi, NormPolicy::Fail)?,
        expectation(&s[2], psi, NormPolicy::Fail)?,
    ])
}

/// Per-axis second moments `⟨S_a²⟩`.
pub fn numeric_second_moments(psi: &QSpinor, hbar: f64) -> Result<[f64; 3]> {
    let s = observables(hbar);
    Ok([
        expectation(&Squared(s[0]), psi, NormPolicy::Fail)?,
        expectation(&Squared(s[1]), psi, NormPolicy::Fail)?,
        expectation(&Squared(s[2]), psi, NormPolicy::Fail)?,
    ])
}

/// `⟨S²⟩`.
pub fn numeric_total_spin_sq(psi: &QSpinor, hbar: f64) -> Result<f64> {
    expectation(&SpinSquared(observables(hbar)), psi, NormPolicy::Fail)
}

/// Central-difference residual `|ħ ∂ₜΨ η − 𝓗Ψ|` at time `t`, step `h`.
pub fn schrodinger_residual(
    psi: impl Fn(f64) -> QSpinor,
    h_op: &QMatrix,
    eta: ImaginaryUnit,
    hbar: f64,
    t: f64,
    h: f64,
) -> f64 {
    let dpsi = (psi(t + h) - psi(t - h)) * (0.5 / h);
    let lhs = dpsi.right_mul(eta.quat()) * hbar;
    lhs.dist(&h_op.apply(&psi(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::larmor::hamiltonian;
    use std::f64::consts::PI;

    #[test]
    fn spin_up_at_origin() {
        let psi = psi_case1(
            &Case1State {
                theta: 0.0,
                alpha: 0.0,
                beta: 0.3,
            },
            &LarmorConfig::default(),
            0.0,
        );
        assert_eq!(psi, QSpinor::new(Quaternion::ONE, Quaternion::ZERO));
    }

    #[test]
    fn case2_origin() {
        let psi = psi_case2(&Case2State { alpha: 0.0, beta: 0.0 }, &LarmorConfig::default(), 0.0);
        assert!(psi.up.approx_eq(Quaternion::scalar(FRAC_1_SQRT_2), 1e-16));
        assert!(psi.down.approx_eq(Quaternion::J * FRAC_1_SQRT_2, 1e-16));
    }

    #[test]
    fn case1_closed_form_matches_numeric() {
        let cfg = LarmorConfig::new(1.3, 0.7, 1.1);
        let st = Case1State {
            theta: 0.4,
            alpha: 1.1,
            beta: -0.6,
        };
        for t in [0.0, 0.8, 5.3] {
            let psi = psi_case1(&st, &cfg, t);
            let num = numeric_expectations(&psi, cfg.hbar).unwrap();
            let cf = expectations_case1(&st, &cfg, t);
            for a in 0..3 {
                assert!((num[a] - cf[a]).abs() < 1e-12, "axis {a}: {} vs {}", num[a], cf[a]);
            }
        }
    }

    #[test]
    fn case1_solves_schrodinger_with_i() {
        let cfg = LarmorConfig::default();
        let st = Case1State {
            theta: 0.9,
            alpha: 0.3,
            beta: 2.0,
        };
        let h = 1e-4;
        let r = schrodinger_residual(
            |t| psi_case1(&st, &cfg, t),
            &hamiltonian(&cfg),
            ImaginaryUnit::i(),
            cfg.hbar,
            1.7,
            h,
        );
        assert!(r < 10.0 * h * h, "{r}");
    }

    #[test]
    fn sigma_examples() {
        let hbar = 1.0;
        assert_eq!(
            sigma_s(
                &Case1State {
                    theta: 0.0,
                    alpha: 1.0,
                    beta: 2.0
                },
                hbar
            ),
            0.0
        );
        assert_eq!(
            sigma_s(
                &Case1State {
                    theta: 0.6,
                    alpha: 1.0,
                    beta: 1.0
                },
                hbar
            ),
            0.0
        );
        let s = sigma_s(
            &Case1State {
                theta: PI / 4.0,
                alpha: PI,
                beta: 0.0,
            },
            hbar,
        );
        assert!((s - 0.5).abs() < 1e-15);
    }

    #[test]
    fn case2_moments_vanish() {
        let cfg = LarmorConfig::default();
        let st = Case2State { alpha: 0.7, beta: -1.9 };
        for t in [0.0, 1.0, 2.5] {
            let psi = psi_case2(&st, &cfg, t);
            for v in numeric_expectations(&psi, 1.0).unwrap() {
                assert!(v.abs() < 1e-12);
            }
            assert!((numeric_total_spin_sq(&psi, 1.0).unwrap() - 0.75).abs() < 1e-12);
        }
    }
}

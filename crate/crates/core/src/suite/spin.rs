use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{measured, miss, Measured, VerifyConfig};
use crate::error::Result;
use crate::exec::nan_max;
use crate::hilbert::QSpinor;
use crate::quat::ImaginaryUnit;
use crate::spin::cases::{
    case2_eta, expectations_case1, mean_spin_sq_case1, numeric_expectations, numeric_second_moments,
    numeric_total_spin_sq, psi_case1, psi_case2, schrodinger_residual, sigma_s, Case1State, Case2State,
};
use crate::spin::evolve::trajectory_deviation;
use crate::spin::larmor::{hamiltonian, LarmorConfig};

const EPS: f64 = 1e-12;
/// States used for the (comparatively expensive) dynamics checks.
const DYNAMICS_STATES: usize = 4;
/// Time samples per state for norm and Schrödinger-residual checks.
const TIME_SAMPLES: usize = 64;

fn fold_max(items: Vec<Result<f64>>) -> Result<f64> {
    items.into_iter().try_fold(0.0, |acc, r| r.map(|v| nan_max(acc, v)))
}

fn case1(rng: &mut ChaCha8Rng) -> Case1State {
    Case1State {
        theta: rng.gen_range(0.0..PI),
        alpha: rng.gen_range(0.0..PI),
        beta: rng.gen_range(0.0..PI),
    }
}

fn case2(rng: &mut ChaCha8Rng) -> Case2State {
    Case2State {
        alpha: rng.gen_range(-PI..PI),
        beta: rng.gen_range(-PI..PI),
    }
}

fn sum_sq(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Worst norm error of `psi` over `[0, t_end]`.
fn norm_sweep(psi: impl Fn(f64) -> QSpinor, t_end: f64) -> f64 {
    (0..=TIME_SAMPLES)
        .map(|k| miss(psi(t_end * k as f64 / TIME_SAMPLES as f64).norm(), 1.0))
        .fold(0.0, nan_max)
}

/// Dynamics checks shared by both families: Schrödinger residual, RK4
/// trajectory error, RK4 order ratio and RK4 norm drift.
struct Dynamics {
    schrodinger: f64,
    error: f64,
    order: f64,
    norm: f64,
}

fn dynamics(exact: impl Fn(f64) -> QSpinor + Copy, eta: ImaginaryUnit, cfg: &VerifyConfig) -> Result<Dynamics> {
    let larmor = &cfg.larmor;
    let h_op = hamiltonian(larmor);
    let t_end = larmor.two_periods();
    let h_t = 1e-4 / larmor.omega().abs();
    let schrodinger = (1..TIME_SAMPLES)
        .map(|k| {
            let t = t_end * k as f64 / TIME_SAMPLES as f64;
            schrodinger_residual(exact, &h_op, eta, larmor.hbar, t, h_t)
        })
        .fold(0.0, nan_max);
    let main = trajectory_deviation(exact, &h_op, eta, larmor, t_end, cfg.rk4_steps)?;
    let coarse = trajectory_deviation(exact, &h_op, eta, larmor, t_end, cfg.rk4_order_steps)?;
    let fine = trajectory_deviation(exact, &h_op, eta, larmor, t_end, 2 * cfg.rk4_order_steps)?;
    Ok(Dynamics {
        schrodinger,
        error: main.max_error,
        order: miss(coarse.max_error / fine.max_error, 16.0),
        norm: main.max_norm_drift,
    })
}

fn merge(acc: Dynamics, d: Dynamics) -> Dynamics {
    Dynamics {
        schrodinger: nan_max(acc.schrodinger, d.schrodinger),
        error: nan_max(acc.error, d.error),
        order: nan_max(acc.order, d.order),
        norm: nan_max(acc.norm, d.norm),
    }
}

fn dynamics_all(results: Vec<Result<Dynamics>>) -> Result<Dynamics> {
    let zero = Dynamics {
        schrodinger: 0.0,
        error: 0.0,
        order: 0.0,
        norm: 0.0,
    };
    results.into_iter().try_fold(zero, |acc, r| r.map(|d| merge(acc, d)))
}

pub(super) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Measured>> {
    let larmor: LarmorConfig = cfg.larmor;
    let hbar = larmor.hbar;
    let t_end = larmor.two_periods();
    let ex = cfg.exec;

    let samples1: Vec<(Case1State, f64)> = (0..cfg.spin_samples)
        .map(|_| (case1(rng), rng.gen_range(0.0..t_end)))
        .collect();
    let samples2: Vec<(Case2State, f64)> = (0..cfg.spin_samples)
        .map(|_| (case2(rng), rng.gen_range(0.0..t_end)))
        .collect();
    let limits: Vec<(Case1State, f64)> = (0..cfg.spin_samples / 10)
        .map(|k| {
            let mut s = case1(rng);
            if k % 2 == 0 {
                s.theta = 0.0;
            } else {
                s.beta = s.alpha;
            }
            (s, rng.gen_range(0.0..t_end))
        })
        .collect();
    let peaks: Vec<(f64, f64)> = (0..8)
        .map(|_| {
            let a = rng.gen_range(0.0..PI);
            let mut b = rng.gen_range(0.0..PI);
            while (a - b).abs() < 1e-3 {
                b = rng.gen_range(0.0..PI);
            }
            (a, b)
        })
        .collect();
    let dyn1: Vec<Case1State> = (0..DYNAMICS_STATES).map(|_| case1(rng)).collect();
    let dyn2: Vec<Case2State> = (0..DYNAMICS_STATES).map(|_| case2(rng)).collect();

    // Case 1 moments.
    let per_sample = ex.map(&samples1, |(s, t)| -> Result<[f64; 5]> {
        let psi = psi_case1(s, &larmor, *t);
        let num = numeric_expectations(&psi, hbar)?;
        let cf = expectations_case1(s, &larmor, *t);
        let expect = (0..3).map(|a| miss(num[a], cf[a])).fold(0.0, nan_max);
        let second = numeric_second_moments(&psi, hbar)?
            .iter()
            .map(|v| miss(*v, hbar * hbar / 4.0))
            .fold(0.0, nan_max);
        let mean_sq = miss(sum_sq(num), mean_spin_sq_case1(s, hbar));
        let sigma = miss(hbar * hbar / 4.0 - sum_sq(num), sigma_s(s, hbar).powi(2));
        Ok([expect, second, mean_sq, sigma, miss(psi.norm(), 1.0)])
    });
    let mut c1 = [0.0; 5];
    for r in per_sample {
        let r = r?;
        for k in 0..5 {
            c1[k] = nan_max(c1[k], r[k]);
        }
    }
    let norm1 = nan_max(
        c1[4],
        fold_max(ex.map(&dyn1, |s| Ok(norm_sweep(|t| psi_case1(s, &larmor, t), t_end))))?,
    );

    let limit = fold_max(ex.map(&limits, |(s, t)| {
        let psi = psi_case1(s, &larmor, *t);
        let num = numeric_expectations(&psi, hbar)?;
        let wt = larmor.omega() * t;
        let h = hbar / 2.0;
        let complex = [
            h * s.alpha.sin() * wt.cos(),
            h * s.alpha.sin() * wt.sin(),
            h * s.alpha.cos(),
        ];
        let d = (0..3).map(|a| miss(num[a], complex[a])).fold(0.0, nan_max);
        Ok(nan_max(
            d,
            nan_max(sigma_s(s, hbar), (hbar * hbar / 4.0 - sum_sq(num)).abs()),
        ))
    }))?;

    const PEAK_GRID: usize = 1000;
    let spacing = PI / 2.0 / PEAK_GRID as f64;
    let peak = peaks
        .iter()
        .map(|&(alpha, beta)| {
            let best = (0..=PEAK_GRID)
                .map(|k| k as f64 * spacing)
                .map(|theta| (theta, sigma_s(&Case1State { theta, alpha, beta }, hbar)))
                .fold((0.0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
            miss(best.0, PI / 4.0)
        })
        .fold(0.0, nan_max);

    let d1 = dynamics_all(ex.map(&dyn1, |s| {
        dynamics(|t| psi_case1(s, &larmor, t), ImaginaryUnit::i(), cfg)
    }))?;

    // Case 2.
    let c2 = ex.map(&samples2, |(s, t)| -> Result<[f64; 3]> {
        let psi = psi_case2(s, &larmor, *t);
        let num = numeric_expectations(&psi, hbar)?;
        let first = num.iter().map(|v| v.abs()).fold(0.0, nan_max);
        let total = miss(numeric_total_spin_sq(&psi, hbar)?, 0.75 * hbar * hbar);
        Ok([first, total, miss(psi.norm(), 1.0)])
    });
    let mut m2 = [0.0; 3];
    for r in c2 {
        let r = r?;
        for k in 0..3 {
            m2[k] = nan_max(m2[k], r[k]);
        }
    }
    let norm2 = nan_max(
        m2[2],
        fold_max(ex.map(&dyn2, |s| Ok(norm_sweep(|t| psi_case2(s, &larmor, t), t_end))))?,
    );
    let d2 = dynamics_all(ex.map(&dyn2, |s| dynamics(|t| psi_case2(s, &larmor, t), case2_eta(s), cfg)))?;

    let h_t = 1e-4 / larmor.omega().abs();
    let fd_tol = 10.0 * h_t * h_t;
    Ok(vec![
        measured("spin.case1_norm", norm1, EPS),
        measured("spin.case1_expectations", c1[0], EPS),
        measured("spin.case1_axis_second_moment", c1[1], EPS),
        measured("spin.case1_mean_square", c1[2], EPS),
        measured("spin.case1_sigma", c1[3], EPS),
        measured("spin.case1_limits", limit, EPS),
        measured("spin.case1_sigma_peak", peak, spacing),
        measured("spin.case1_schrodinger", d1.schrodinger, fd_tol),
        measured("spin.case1_rk4_error", d1.error, 1e-8),
        measured("spin.case1_rk4_order", d1.order, 2.0),
        measured("spin.case1_rk4_norm", d1.norm, 1e-8),
        measured("spin.case2_norm", norm2, EPS),
        measured("spin.case2_expectations", m2[0], EPS),
        measured("spin.case2_total_spin", m2[1], EPS),
        measured("spin.case2_schrodinger", d2.schrodinger, fd_tol),
        measured("spin.case2_rk4_error", d2.error, 1e-8),
        measured("spin.case2_rk4_order", d2.order, 2.0),
        measured("spin.case2_rk4_norm", d2.norm, 1e-8),
    ])
}

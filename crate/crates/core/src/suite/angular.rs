use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::waves::ratio;
use super::{measured, miss, Measured, VerifyConfig};
use crate::angular::orbital::{orbital_commutator_check, orbital_convergence, Axis, TestFunction, DEFAULT_HALF_WIDTH};
use crate::angular::sphere::{l2_apply_with, l3_apply, SphereGrid};
use crate::error::Result;
use crate::exec::nan_max;
use crate::quat::ImaginaryUnit;
use crate::waves::harmonic::{harmonic_family, SphericalHarmonicSpec};
use crate::waves::quadrature::GaussLegendre;

/// `max |L₃𝓨 − ħm𝓨|` on a grid, and its leading-order bound.
fn l3_residual(spec: &SphericalHarmonicSpec, y: &SphereGrid, hbar: f64) -> Result<(f64, f64)> {
    let l3 = l3_apply(y, spec.eta(), hbar)?;
    let r = l3.max_dist(&y.scaled(hbar * spec.m() as f64))?;
    let h = y.phi_spacing();
    let bound = hbar * (spec.m().unsigned_abs() as f64).powi(3) * h * h / 6.0 * y.max_norm();
    Ok((r, bound))
}

fn fold_max(items: Vec<Result<f64>>) -> Result<f64> {
    items.into_iter().try_fold(0.0, |acc, r| r.map(|v| nan_max(acc, v)))
}

pub(super) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Measured>> {
    let theta0 = rng.gen_range(0.0..PI);
    let gamma0 = rng.gen_range(-PI..PI);
    let omega0 = rng.gen_range(-PI..PI);
    let delta = rng.gen_range(-PI..PI);
    let hbar = cfg.larmor.hbar;
    let ex = cfg.exec;

    let gl = GaussLegendre::new(cfg.theta_nodes);
    let family = harmonic_family(cfg.ell_max, theta0, gamma0, omega0);

    // Harmonics are processed one at a time; the operators parallelize inside.
    let mut l3_ratio: f64 = 0.0;
    let mut l3_coarse: f64 = 0.0;
    let mut l2: f64 = 0.0;
    let mut comm: f64 = 0.0;
    for spec in &family {
        let y = SphereGrid::sample_harmonic(spec, &gl, cfg.phi_nodes);
        let (r, bound) = l3_residual(spec, &y, hbar)?;
        l3_ratio = nan_max(l3_ratio, ratio(r, bound));
        l3_coarse = nan_max(l3_coarse, r);

        let lam = hbar * hbar * (spec.ell() * (spec.ell() + 1)) as f64;
        let l2y = l2_apply_with(&y, hbar, ex)?;
        l2 = nan_max(l2, l2y.max_dist(&y.scaled(lam))?);

        let eta = spec.eta();
        let a = l2_apply_with(&l3_apply(&y, eta, hbar)?, hbar, ex)?;
        let b = l3_apply(&l2y, eta, hbar)?;
        comm = nan_max(comm, a.max_dist(&b)?);
    }
    let l3_fine = fold_max(ex.map(&family, |spec| {
        let y = SphereGrid::sample_harmonic(spec, &gl, 2 * cfg.phi_nodes);
        l3_residual(spec, &y, hbar).map(|(r, _)| r)
    }))?;
    let l3_order = miss((l3_coarse / l3_fine).log2(), 2.0);

    let tests = TestFunction::default_set();
    let conv_i = orbital_convergence(
        Axis::X1,
        Axis::X2,
        ImaginaryUnit::i(),
        hbar,
        &tests,
        cfg.cube,
        DEFAULT_HALF_WIDTH,
        ex,
    )?;
    let eta_j = ImaginaryUnit::phased_j(delta);
    let conv_j = orbital_convergence(
        Axis::X2,
        Axis::X3,
        eta_j,
        hbar,
        &tests,
        cfg.cube,
        DEFAULT_HALF_WIDTH,
        ex,
    )?;
    // Same-axis commutators vanish identically.
    let same = orbital_commutator_check(
        Axis::X3,
        Axis::X3,
        eta_j,
        hbar,
        &tests,
        cfg.cube,
        DEFAULT_HALF_WIDTH,
        ex,
    )?;
    let bound = cfg.orbital_c * conv_i.h_coarse * conv_i.h_coarse;

    Ok(vec![
        measured("angular.l3_eigen", l3_ratio, 1.0),
        measured("angular.l3_order", l3_order, 0.1),
        measured("angular.l2_eigen", l2, 1e-8),
        measured("angular.l2_l3_commute", comm, 1e-8),
        measured("angular.orbital_i", conv_i.coarse.max(same), bound),
        measured("angular.orbital_jphase", conv_j.coarse, bound),
        measured(
            "angular.orbital_order",
            nan_max(miss(conv_i.order, 2.0), miss(conv_j.order, 2.0)),
            0.2,
        ),
    ])
}

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{measured, miss, Measured, VerifyConfig};
use crate::angular::sphere::SphereGrid;
use crate::error::Result;
use crate::exec::nan_max;
use crate::quat::{Quaternion, EPS_ALG};
use crate::waves::eigen::{convergence_study, truncation_bounds};
use crate::waves::harmonic::{harmonic_family, AzimuthalFactor, SphericalHarmonicSpec};
use crate::waves::lambda::{LambdaSpec, LambdaVariant};
use crate::waves::legendre::{assoc_legendre, factorial_ratio};
use crate::waves::quadrature::GaussLegendre;

pub(super) const WAVENUMBERS: [f64; 3] = [1.0, 2.0, 5.0];

/// `r / (bound + ε)`: at most 1 when `r` respects an analytic truncation
/// bound up to rounding.
pub(super) fn ratio(r: f64, bound: f64) -> f64 {
    r / (bound + EPS_ALG)
}

/// Standard complex `Y_ℓ^m`, built from the `m ≥ 0` function and
/// `Y_ℓ^{−m} = (−1)^m conj(Y_ℓ^m)`.
pub(crate) fn standard_ylm(ell: u32, m: i32, theta: f64, phi: f64) -> Quaternion {
    let am = m.unsigned_abs();
    let n = ((2 * ell + 1) as f64 / (4.0 * PI) * factorial_ratio(ell, am)).sqrt();
    let p = assoc_legendre(ell, am as i32, theta.cos()).expect("|m| ≤ ell");
    let pos = Quaternion::cis(am as f64 * phi) * (n * p);
    if m >= 0 {
        pos
    } else {
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        pos.conj() * sign
    }
}

pub(super) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Measured>> {
    let theta0 = rng.gen_range(0.0..PI);
    let gamma0 = rng.gen_range(-PI..PI);
    let omega0 = rng.gen_range(-PI..PI);

    let mut b1 = 0.0;
    let mut b2 = 0.0;
    let mut o1: f64 = 0.0;
    let mut o2: f64 = 0.0;
    for variant in LambdaVariant::ALL {
        for m in WAVENUMBERS {
            let spec = LambdaSpec {
                variant,
                m,
                theta0,
                gamma0,
                omega0,
            };
            let study = convergence_study(&spec, cfg.grid)?;
            for r in [study.coarse, study.fine] {
                let (c1, c2) = truncation_bounds(m, r.spacing);
                for v in [r.first_left, r.first_right].into_iter().flatten() {
                    b1 = nan_max(b1, ratio(v, c1));
                }
                b2 = nan_max(b2, ratio(r.second, c2));
            }
            for ord in [study.first_left_order, study.first_right_order].into_iter().flatten() {
                o1 = nan_max(o1, miss(ord, 2.0));
            }
            o2 = nan_max(o2, study.second_order.map_or(f64::NAN, |o| miss(o, 2.0)));
        }
    }

    let gl = GaussLegendre::new(cfg.theta_nodes);
    let family = harmonic_family(cfg.ell_max, theta0, gamma0, omega0);
    let grids: Vec<SphereGrid> = cfg
        .exec
        .map(&family, |s| SphereGrid::sample_harmonic(s, &gl, cfg.phi_nodes));
    let norm = cfg
        .exec
        .map_index(family.len(), |a| grids[a].real_inner(&grids[a]).map(|v| miss(v, 1.0)))
        .into_iter()
        .try_fold(0.0, |acc, r| r.map(|v| nan_max(acc, v)))?;
    let ortho = cfg
        .exec
        .map_index(family.len(), |a| {
            let mut worst: f64 = 0.0;
            for b in (a + 1)..family.len() {
                if same_factor(&family[a], &family[b]) {
                    worst = nan_max(worst, grids[a].real_inner(&grids[b])?.abs());
                }
            }
            Ok(worst)
        })
        .into_iter()
        .try_fold(0.0, |acc, r: Result<f64>| r.map(|v| nan_max(acc, v)))?;

    let complex: Vec<SphericalHarmonicSpec> = (0..=cfg.ell_max)
        .flat_map(|ell| (-(ell as i32)..=ell as i32).map(move |m| (ell, m)))
        .map(|(ell, m)| SphericalHarmonicSpec::new(ell, m, AzimuthalFactor::Lambda2 { theta0: 0.0 }))
        .collect::<Result<_>>()?;
    let phi: Vec<f64> = (0..cfg.phi_nodes)
        .map(|k| 2.0 * PI * k as f64 / cfg.phi_nodes as f64)
        .collect();
    let mut jk: f64 = 0.0;
    let mut standard: f64 = 0.0;
    for spec in &complex {
        for &u in &gl.nodes {
            let t = u.acos();
            for &p in &phi {
                let y = spec.eval(t, p);
                jk = nan_max(jk, y.y.abs().max(y.z.abs()));
                standard = nan_max(standard, y.dist(standard_ylm(spec.ell(), spec.m(), t, p)));
            }
        }
    }

    Ok(vec![
        measured("waves.first_derivative_bound", b1, 1.0),
        measured("waves.first_derivative_order", o1, 0.1),
        measured("waves.second_derivative_bound", b2, 1.0),
        measured("waves.second_derivative_order", o2, 0.1),
        measured("waves.harmonic_normalization", norm, 1e-10),
        measured("waves.harmonic_orthogonality", ortho, 1e-10),
        measured("waves.complex_limit_jk", jk, 1e-14),
        measured("waves.complex_limit_standard", standard, 1e-12),
    ])
}

fn same_factor(a: &SphericalHarmonicSpec, b: &SphericalHarmonicSpec) -> bool {
    std::mem::discriminant(&a.factor()) == std::mem::discriminant(&b.factor())
}

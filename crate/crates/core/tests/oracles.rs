//! Independent closed forms checked against the library.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

use hqm::angular::orbital::{orbital_commutator_check, orbital_convergence, Axis, TestFunction, DEFAULT_HALF_WIDTH};
use hqm::angular::sphere::{l2_apply, l3_apply, SphereGrid};
use hqm::spin::{
    case2_eta, expectations_case1, hamiltonian, numeric_expectations, psi_case1, psi_case2, schrodinger_residual,
    sigma_s, trajectory_deviation, Case1State, Case2State, LarmorConfig,
};
use hqm::waves::harmonic::{AzimuthalFactor, SphericalHarmonicSpec};
use hqm::waves::legendre::assoc_legendre;
use hqm::waves::quadrature::GaussLegendre;
use hqm::{Exec, ImaginaryUnit, QMatrix, QSpinor, Quaternion};

#[test]
fn legendre_closed_forms() {
    for &u in &[-0.9, -0.3, 0.0, 0.45, 0.8, 1.0] {
        let s = (1.0f64 - u * u).sqrt();
        let table = [
            (3, 0, (5.0 * u * u * u - 3.0 * u) / 2.0),
            (3, 1, -1.5 * (5.0 * u * u - 1.0) * s),
            (3, 2, 15.0 * u * s * s),
            (3, 3, -15.0 * s * s * s),
            (2, -2, s * s / 8.0),
            (3, -1, 1.5 * (5.0 * u * u - 1.0) * s / 12.0),
        ];
        for (ell, m, expect) in table {
            let got = assoc_legendre(ell, m, u).unwrap();
            assert!((got - expect).abs() < 1e-13, "P_{ell}^{m}({u}) = {got}, want {expect}");
        }
    }
}

fn standard_y(ell: u32, m: i32, t: f64, p: f64) -> Quaternion {
    let (s, c) = t.sin_cos();
    let amp = match (ell, m) {
        (0, 0) => 0.5 / PI.sqrt(),
        (1, 0) => (3.0 / (4.0 * PI)).sqrt() * c,
        (1, 1) => -(3.0 / (8.0 * PI)).sqrt() * s,
        (1, -1) => (3.0 / (8.0 * PI)).sqrt() * s,
        (2, 0) => (5.0 / (16.0 * PI)).sqrt() * (3.0 * c * c - 1.0),
        (2, 1) => -(15.0 / (8.0 * PI)).sqrt() * s * c,
        (2, -1) => (15.0 / (8.0 * PI)).sqrt() * s * c,
        (2, 2) | (2, -2) => (15.0 / (32.0 * PI)).sqrt() * s * s,
        _ => unreachable!(),
    };
    Quaternion::cis(m as f64 * p) * amp
}

#[test]
fn complex_limit_matches_textbook_harmonics() {
    for ell in 0..=2u32 {
        for m in -(ell as i32)..=(ell as i32) {
            let y = SphericalHarmonicSpec::new(ell, m, AzimuthalFactor::Lambda2 { theta0: 0.0 }).unwrap();
            for &(t, p) in &[(0.3, 0.1), (1.2, 2.5), (2.7, 5.9)] {
                let got = y.eval(t, p);
                assert!(got.dist(standard_y(ell, m, t, p)) < 1e-14, "Y_{ell}^{m}");
                assert!(got.y.abs() <= 1e-14 && got.z.abs() <= 1e-14);
            }
        }
    }
}

#[test]
fn harmonics_are_l2_and_l3_eigenfunctions() {
    let gl = GaussLegendre::new(24);
    for factor in [
        AzimuthalFactor::Lambda2 { theta0: 0.9 },
        AzimuthalFactor::Lambda3 {
            gamma0: 0.4,
            omega0: -1.3,
        },
    ] {
        for ell in 0..=3u32 {
            for m in -(ell as i32)..=(ell as i32) {
                let spec = SphericalHarmonicSpec::new(ell, m, factor).unwrap();
                let y = SphereGrid::sample_harmonic(&spec, &gl, 64);
                let l2 = l2_apply(&y, 1.0).unwrap();
                assert!(l2.max_dist(&y.scaled((ell * (ell + 1)) as f64)).unwrap() < 1e-9);
                // The central difference maps Λ(mφ) to (sin mh / h)Λ exactly.
                let h = y.phi_spacing();
                let discrete = (m as f64 * h).sin() / h;
                let l3 = l3_apply(&y, spec.eta(), 1.0).unwrap();
                assert!(l3.max_dist(&y.scaled(discrete)).unwrap() < 1e-12, "ell={ell} m={m}");
            }
        }
    }
}

#[test]
fn orbital_algebra_converges_at_second_order() {
    let tests = TestFunction::default_set();
    let eta = ImaginaryUnit::phased_j(0.83);
    let conv = orbital_convergence(
        Axis::X2,
        Axis::X3,
        eta,
        1.0,
        &tests,
        32,
        DEFAULT_HALF_WIDTH,
        Exec::default(),
    )
    .unwrap();
    assert!(conv.coarse <= 0.5 * conv.h_coarse * conv.h_coarse);
    assert!((conv.order - 2.0).abs() <= 0.2, "order {}", conv.order);
    let reversed = orbital_commutator_check(
        Axis::X3,
        Axis::X2,
        eta,
        1.0,
        &tests,
        32,
        DEFAULT_HALF_WIDTH,
        Exec::default(),
    )
    .unwrap();
    assert!((reversed - conv.coarse).abs() < 1e-12);
}

/// `⟨σ⟩` of a complex spinor computed with the textbook complex Pauli
/// matrices, written out component by component.
fn complex_pauli_expectations(up: (f64, f64), down: (f64, f64)) -> [f64; 3] {
    let (a, b) = up;
    let (c, d) = down;
    // ⟨σ₁⟩ = 2 Re(ū d̄...), with u = a + ib, v = c + id.
    let s1 = 2.0 * (a * c + b * d);
    let s2 = 2.0 * (a * d - b * c);
    let s3 = a * a + b * b - c * c - d * d;
    [s1, s2, s3]
}

#[test]
fn theta_zero_is_the_complex_larmor_solution() {
    let cfg = LarmorConfig::new(1.7, 0.6, 1.3);
    for &(alpha, t) in &[(0.4, 0.0), (FRAC_PI_2, 2.1), (2.8, 7.5)] {
        let st = Case1State {
            theta: 0.0,
            alpha,
            beta: 1.9,
        };
        let psi = psi_case1(&st, &cfg, t);
        // exp(−i𝓗t/ħ) acting on (cos α/2, sin α/2).
        let ph = cfg.energy() * t / cfg.hbar;
        let up = ((alpha / 2.0).cos() * ph.cos(), (alpha / 2.0).cos() * ph.sin());
        let down = ((alpha / 2.0).sin() * ph.cos(), -(alpha / 2.0).sin() * ph.sin());
        assert!(
            psi.dist(&QSpinor::new(
                Quaternion::complex(up.0, up.1),
                Quaternion::complex(down.0, down.1)
            )) < 1e-15
        );
        let ref_s = complex_pauli_expectations(up, down).map(|v| v * cfg.hbar / 2.0);
        let num = numeric_expectations(&psi, cfg.hbar).unwrap();
        let cf = expectations_case1(&st, &cfg, t);
        for a in 0..3 {
            assert!((num[a] - ref_s[a]).abs() < 1e-12);
            assert!((cf[a] - ref_s[a]).abs() < 1e-12);
        }
    }
}

#[test]
fn equal_cone_angles_give_the_complex_result() {
    let cfg = LarmorConfig::default();
    let st = Case1State {
        theta: 0.7,
        alpha: 1.1,
        beta: 1.1,
    };
    let t = 3.3;
    let num = numeric_expectations(&psi_case1(&st, &cfg, t), 1.0).unwrap();
    let wt = cfg.omega() * t;
    let expect = [
        0.5 * 1.1f64.sin() * wt.cos(),
        0.5 * 1.1f64.sin() * wt.sin(),
        0.5 * 1.1f64.cos(),
    ];
    for a in 0..3 {
        assert!((num[a] - expect[a]).abs() < 1e-12);
    }
    assert_eq!(sigma_s(&st, 1.0), 0.0);
}

#[test]
fn maximal_spread() {
    let st = Case1State {
        theta: FRAC_PI_4,
        alpha: PI,
        beta: 0.0,
    };
    assert!((sigma_s(&st, 1.0) - 0.5).abs() < 1e-15);
    let num = numeric_expectations(&psi_case1(&st, &LarmorConfig::default(), 0.9), 1.0).unwrap();
    let variance = 0.25 - num.iter().map(|v| v * v).sum::<f64>();
    assert!((variance - 0.25).abs() < 1e-12);
}

#[test]
fn hamiltonian_by_hand() {
    let h = hamiltonian(&LarmorConfig::new(1.0, 1.0, 2.0));
    assert_eq!(h, QMatrix::from_real([[-1.0, 0.0], [0.0, 1.0]]));
}

#[test]
fn case2_sweep_over_a_period() {
    let cfg = LarmorConfig::new(0.8, 1.5, 1.0);
    let st = Case2State { alpha: 0.3, beta: 2.2 };
    let period = 2.0 * PI / cfg.omega().abs();
    for k in 0..=200 {
        let t = period * k as f64 / 200.0;
        let psi = psi_case2(&st, &cfg, t);
        assert!((psi.norm() - 1.0).abs() < 1e-12);
        for v in numeric_expectations(&psi, 1.0).unwrap() {
            assert!(v.abs() <= 1e-12);
        }
    }
    let origin = psi_case2(&Case2State { alpha: 0.0, beta: 0.0 }, &cfg, 0.0);
    assert!(
        origin.dist(&QSpinor::new(
            Quaternion::scalar(FRAC_1_SQRT_2),
            Quaternion::J * FRAC_1_SQRT_2
        )) < 1e-16
    );
}

#[test]
fn case2_closed_form_is_not_a_larmor_solution() {
    // The closed form mixes up and down components, which a diagonal
    // Hamiltonian cannot do. It does solve the equation with 𝓗 = −E·𝟙 and
    // η = j e^{i(α−β)}; neither is the Larmor setup, so the library keeps
    // the Larmor Hamiltonian and reports the mismatch.
    let cfg = LarmorConfig::default();
    let st = Case2State { alpha: 0.9, beta: -0.4 };
    let psi = |t| psi_case2(&st, &cfg, t);
    let h_t = 1e-4;
    let larmor = schrodinger_residual(psi, &hamiltonian(&cfg), case2_eta(&st), 1.0, 1.3, h_t);
    assert!(larmor > 0.1, "{larmor}");
    let scalar_h = QMatrix::identity().scale(-cfg.energy());
    let eta = ImaginaryUnit::phased_j(st.beta - st.alpha);
    let alt = schrodinger_residual(psi, &scalar_h, eta, 1.0, 1.3, h_t);
    assert!(alt < 10.0 * h_t * h_t, "{alt}");
}

#[test]
fn rk4_reproduces_case1_at_fourth_order() {
    let cfg = LarmorConfig::new(1.0, 2.0, 1.0);
    let st = Case1State {
        theta: 1.2,
        alpha: 0.5,
        beta: 2.5,
    };
    let t = cfg.two_periods();
    let h = hamiltonian(&cfg);
    let exact = |s| psi_case1(&st, &cfg, s);
    let main = trajectory_deviation(exact, &h, ImaginaryUnit::i(), &cfg, t, 10_000).unwrap();
    assert!(main.max_error < 1e-8 && main.max_norm_drift < 1e-8);
    let c = trajectory_deviation(exact, &h, ImaginaryUnit::i(), &cfg, t, 100).unwrap();
    let f = trajectory_deviation(exact, &h, ImaginaryUnit::i(), &cfg, t, 200).unwrap();
    assert!((c.max_error / f.max_error - 16.0).abs() < 2.0);
}

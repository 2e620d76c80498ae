//! Spin operators and the Larmor Hamiltonian.
//!
//! `S₁ = ħ/2 σ₁` and `S₃ = ħ/2 σ₃` are real matrices. The second component is
//! the barred rotation `S₂ = ħ/2 (J|η)` with `J = [[0, −1], [1, 0]]`; for
//! η = i and complex spinors it coincides with `ħ/2 σ₂`. The family satisfies
//! `[S_a, S_b] = ħ ε_abc (S_c|η)` for every unit η.

use serde::{Deserialize, Serialize};

use crate::exec::{nan_max, Exec};
use crate::hilbert::{commutator, BarredOp, Operator, QMatrix, QSpinor, RealLinearMap};
use crate::quat::ImaginaryUnit;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LarmorConfig {
    pub gamma: f64,
    pub b0: f64,
    pub hbar: f64,
}

impl Default for LarmorConfig {
    fn default() -> Self {
        Self {
            gamma: 1.0,
            b0: 1.0,
            hbar: 1.0,
        }
    }
}

impl LarmorConfig {
    pub fn new(gamma: f64, b0: f64, hbar: f64) -> Self {
        Self { gamma, b0, hbar }
    }

    /// `E = ħγB₀/2`.
    pub fn energy(&self) -> f64 {
        self.hbar * self.gamma * self.b0 / 2.0
    }

    /// `ω = −γB₀`.
    pub fn omega(&self) -> f64 {
        -self.gamma * self.b0
    }

    /// Two precession periods, `4π/|ω|`.
    pub fn two_periods(&self) -> f64 {
        4.0 * std::f64::consts::PI / self.omega().abs()
    }
}

/// `𝓗 = −E σ₃`.
pub fn hamiltonian(cfg: &LarmorConfig) -> QMatrix {
    QMatrix::pauli_z().scale(-cfg.energy())
}

/// `[S₁, S₂, S₃]` with right unit `eta` on the middle component.
pub fn spin_operators(eta: ImaginaryUnit, hbar: f64) -> [Operator; 3] {
    let h = hbar / 2.0;
    [
        Operator::Matrix(QMatrix::pauli_x().scale(h)),
        Operator::Barred(BarredOp::new(QMatrix::rotation().scale(h), eta)),
        Operator::Matrix(QMatrix::pauli_z().scale(h)),
    ]
}

/// The observables used for expectation values (η = i).
pub fn observables(hbar: f64) -> [Operator; 3] {
    spin_operators(ImaginaryUnit::i(), hbar)
}

/// `S² = S₁² + S₂² + S₃²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinSquared(pub [Operator; 3]);

impl SpinSquared {
    pub fn new(eta: ImaginaryUnit, hbar: f64) -> Self {
        Self(spin_operators(eta, hbar))
    }
}

impl RealLinearMap for SpinSquared {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        self.0
            .iter()
            .map(|s| s.apply(&s.apply(psi)))
            .fold(QSpinor::default(), |acc, v| acc + v)
    }
}

/// `S_a²` alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Squared(pub Operator);

impl RealLinearMap for Squared {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        self.0.apply(&self.0.apply(psi))
    }
}

/// `max_{a,b,ψ} |[S_a, S_b]ψ − ħ ε_abc (S_c ψ)η|` over the real basis.
pub fn spin_commutator_residual(eta: ImaginaryUnit, hbar: f64, exec: Exec) -> f64 {
    let s = spin_operators(eta, hbar);
    let basis = QSpinor::real_basis();
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
    exec.max_of(&pairs, |&(a, b)| {
        let comm = commutator(&s[a], &s[b]);
        basis
            .iter()
            .map(|psi| {
                let lhs = comm.apply(psi);
                let rhs = if a == b {
                    QSpinor::default()
                } else {
                    let c = 3 - a - b;
                    let sign = if (a + 1) % 3 == b { 1.0 } else { -1.0 };
                    s[c].apply(psi).right_mul(eta.quat()) * (hbar * sign)
                };
                lhs.dist(&rhs)
            })
            .fold(0.0, nan_max)
    })
}

/// `max_{a,ψ} |[S², S_a]ψ|` over the real basis.
pub fn spin_casimir_residual(eta: ImaginaryUnit, hbar: f64) -> f64 {
    let s = spin_operators(eta, hbar);
    let s2 = SpinSquared(s);
    let basis = QSpinor::real_basis();
    s.iter()
        .flat_map(|sa| basis.iter().map(move |psi| (sa, psi)))
        .map(|(sa, psi)| commutator(&s2, sa).apply(psi).norm())
        .fold(0.0, nan_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(hamiltonian(&LarmorConfig::new(0.0, 1.0, 1.0)).frobenius_norm(), 0.0);
        let h = hamiltonian(&LarmorConfig::new(1.0, 1.0, 2.0));
        assert_eq!(h.entry(0, 0), Quaternion::scalar(-1.0));
        assert_eq!(h.entry(1, 1), Quaternion::scalar(1.0));
        assert!(h.is_hermitian(0.0));
    }

    #[test]
    fn spin_algebra_for_i_and_phased_j() {
        assert!(spin_commutator_residual(ImaginaryUnit::i(), 1.0, Exec::Sequential) < 1e-15);
        assert!(spin_commutator_residual(ImaginaryUnit::phased_j(0.7), 2.5, Exec::Sequential) < 1e-12);
        assert!(spin_casimir_residual(ImaginaryUnit::phased_j(-1.2), 1.3) < 1e-12);
    }

    #[test]
    fn s_squared_is_three_quarters() {
        let s2 = SpinSquared::new(ImaginaryUnit::i(), 2.0);
        for psi in QSpinor::real_basis() {
            assert!(s2.apply(&psi).dist(&(psi * 3.0)) < 1e-15);
        }
    }

    #[test]
    fn sigma2_matches_complex_pauli_on_complex_spinors() {
        let [_, s2, _] = observables(2.0);
        let psi = QSpinor::new(Quaternion::complex(0.3, 0.4), Quaternion::complex(-0.5, 0.2));
        // σ₂ = [[0, −i], [i, 0]]
        let expect = QSpinor::new(Quaternion::I * psi.down * -1.0, Quaternion::I * psi.up);
        assert!(s2.apply(&psi).dist(&expect) < 1e-15);
    }

    #[test]
    fn omega_and_energy() {
        let c = LarmorConfig::new(2.0, 3.0, 0.5);
        assert_eq!(c.energy(), 1.5);
        assert_eq!(c.omega(), -6.0);
    }
}

//! The three unit-quaternion function classes and their derivative
//! eigenstructure.
//!
//! ```text
//! Λ₁(x) = cosθ₀ e^{imx} + sinθ₀ e^{imx} j         dΛ₁/dx = (im) Λ₁
//! Λ₂(x) = cosθ₀ e^{imx} + sinθ₀ e^{−imx} j        dΛ₂/dx = Λ₂ (im)
//! Λ₃(x) = cos(mx) e^{iΓ₀} + sin(mx) e^{iΩ₀} j     dΛ₃/dx = m e^{i(Γ₀+Ω₀)} j Λ₃
//!                                                        = Λ₃ m j e^{i(Γ₀−Ω₀)}
//! ```

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::quat::{ImaginaryUnit, Quaternion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LambdaVariant {
    L1,
    L2,
    L3,
}

impl LambdaVariant {
    pub const ALL: [LambdaVariant; 3] = [LambdaVariant::L1, LambdaVariant::L2, LambdaVariant::L3];

    pub fn name(self) -> &'static str {
        match self {
            LambdaVariant::L1 => "lambda1",
            LambdaVariant::L2 => "lambda2",
            LambdaVariant::L3 => "lambda3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaSpec {
    pub variant: LambdaVariant,
    /// Wavenumber.
    pub m: f64,
    /// Mixing angle for Λ₁/Λ₂.
    pub theta0: f64,
    /// Λ₃ phase Γ₀.
    pub gamma0: f64,
    /// Λ₃ phase Ω₀.
    pub omega0: f64,
}

/// Which side of Λ the derivative eigenvalue multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EigenSide {
    Left,
    Right,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeEigen {
    pub side: EigenSide,
    /// μ with dΛ/dx = μΛ, when it exists.
    pub left: Option<Quaternion>,
    /// μ with dΛ/dx = Λμ, when it exists.
    pub right: Option<Quaternion>,
}

impl LambdaSpec {
    pub fn lambda1(m: f64, theta0: f64) -> Self {
        Self {
            variant: LambdaVariant::L1,
            m,
            theta0,
            gamma0: 0.0,
            omega0: 0.0,
        }
    }

    pub fn lambda2(m: f64, theta0: f64) -> Self {
        Self {
            variant: LambdaVariant::L2,
            m,
            theta0,
            gamma0: 0.0,
            omega0: 0.0,
        }
    }

    pub fn lambda3(m: f64, gamma0: f64, omega0: f64) -> Self {
        Self {
            variant: LambdaVariant::L3,
            m,
            theta0: 0.0,
            gamma0,
            omega0,
        }
    }

    pub fn eval(&self, x: f64) -> Quaternion {
        eval_lambda(self, x)
    }

    /// Exact derivative, for oracle use.
    pub fn derivative(&self, x: f64) -> Quaternion {
        let m = self.m;
        let (s0, c0) = self.theta0.sin_cos();
        match self.variant {
            LambdaVariant::L1 => {
                let d = Quaternion::cis(m * x) * Quaternion::complex(0.0, m);
                d * Quaternion::scalar(c0) + d * Quaternion::J * s0
            }
            LambdaVariant::L2 => {
                Quaternion::cis(m * x) * Quaternion::complex(0.0, m * c0)
                    + Quaternion::cis(-m * x) * Quaternion::complex(0.0, -m * s0) * Quaternion::J
            }
            LambdaVariant::L3 => {
                let (s, c) = (m * x).sin_cos();
                Quaternion::cis(self.gamma0) * (-m * s) + Quaternion::cis_j(self.omega0) * (m * c)
            }
        }
    }

    /// Period of Λ in `x`; `2π` when `m = 0`.
    pub fn period(&self) -> f64 {
        if self.m == 0.0 {
            TAU
        } else {
            TAU / self.m.abs()
        }
    }

    pub fn derivative_eigen(&self) -> DerivativeEigen {
        lambda_derivative_eigenvalue(self)
    }

    /// The right unit η that turns Λ into an eigenfunction of `−(d/dx | η)`.
    /// `i` for Λ₂, `j e^{i(Γ₀−Ω₀)}` for Λ₃. Λ₁ has no such unit.
    pub fn right_unit(&self) -> Option<ImaginaryUnit> {
        match self.variant {
            LambdaVariant::L1 => None,
            LambdaVariant::L2 => Some(ImaginaryUnit::i()),
            LambdaVariant::L3 => Some(ImaginaryUnit::phased_j(self.omega0 - self.gamma0)),
        }
    }
}

/// Evaluates Λ at `x`.
pub fn eval_lambda(spec: &LambdaSpec, x: f64) -> Quaternion {
    let m = spec.m;
    let (s0, c0) = spec.theta0.sin_cos();
    match spec.variant {
        LambdaVariant::L1 => Quaternion::cis(m * x) * (Quaternion::scalar(c0) + Quaternion::J * s0),
        LambdaVariant::L2 => Quaternion::cis(m * x) * c0 + Quaternion::cis_j(-m * x) * s0,
        LambdaVariant::L3 => {
            let (s, c) = (m * x).sin_cos();
            Quaternion::cis(spec.gamma0) * c + Quaternion::cis_j(spec.omega0) * s
        }
    }
}

/// Analytic derivative eigenstructure of Λ.
pub fn lambda_derivative_eigenvalue(spec: &LambdaSpec) -> DerivativeEigen {
    let im = Quaternion::complex(0.0, spec.m);
    match spec.variant {
        LambdaVariant::L1 => DerivativeEigen {
            side: EigenSide::Left,
            left: Some(im),
            right: None,
        },
        LambdaVariant::L2 => DerivativeEigen {
            side: EigenSide::Right,
            left: None,
            right: Some(im),
        },
        LambdaVariant::L3 => {
            let (g, o) = (spec.gamma0, spec.omega0);
            DerivativeEigen {
                side: EigenSide::Both,
                left: Some(Quaternion::cis_j(g + o) * spec.m),
                right: Some(Quaternion::J * Quaternion::cis(g - o) * spec.m),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::EPS_ALG;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn reductions() {
        let l1 = LambdaSpec::lambda1(2.0, 0.0);
        for x in [0.0, 0.3, 1.7] {
            assert!(l1.eval(x).approx_eq(Quaternion::cis(2.0 * x), 1e-15));
        }
        let l2 = LambdaSpec::lambda2(3.0, FRAC_PI_2);
        assert!(l2.eval(0.0).approx_eq(Quaternion::J, 1e-15));
    }

    #[test]
    fn analytic_derivative_matches_eigen_forms() {
        let specs = [
            LambdaSpec::lambda1(1.7, 0.4),
            LambdaSpec::lambda2(2.3, 1.1),
            LambdaSpec::lambda3(1.3, 0.7, -0.5),
        ];
        for spec in specs {
            let eig = spec.derivative_eigen();
            for x in [-1.0, 0.0, 0.37, 2.9] {
                let d = spec.derivative(x);
                let l = spec.eval(x);
                if let Some(mu) = eig.left {
                    assert!((mu * l).approx_eq(d, EPS_ALG), "{spec:?} left at {x}");
                }
                if let Some(mu) = eig.right {
                    assert!((l * mu).approx_eq(d, EPS_ALG), "{spec:?} right at {x}");
                }
            }
        }
    }

    #[test]
    fn eigen_sides() {
        assert_eq!(LambdaSpec::lambda1(1.0, 0.2).derivative_eigen().side, EigenSide::Left);
        assert_eq!(LambdaSpec::lambda2(1.0, 0.2).derivative_eigen().side, EigenSide::Right);
        assert_eq!(
            LambdaSpec::lambda3(1.0, 0.2, 0.1).derivative_eigen().side,
            EigenSide::Both
        );
    }

    #[test]
    fn right_unit_of_lambda3_is_j_phase() {
        let spec = LambdaSpec::lambda3(2.0, 0.9, 0.2);
        let eta = spec.right_unit().unwrap().quat();
        let expected = Quaternion::J * Quaternion::cis(0.9 - 0.2);
        assert!(eta.approx_eq(expected, EPS_ALG));
        let right = spec.derivative_eigen().right.unwrap();
        assert!(right.approx_eq(eta * 2.0, EPS_ALG));
    }
}

//! Quaternionic spherical harmonics
//! `𝓨_ℓ^m(θ, φ) = σ N_ℓ^{|m|} P̄_ℓ^{|m|}(cos θ) Λ(φ)`, with Λ ∈ {Λ₂, Λ₃} at
//! wavenumber `m`.
//!
//! `N_ℓ^{|m|} = √[(2ℓ+1)/4π · (ℓ−|m|)!/(ℓ+|m|)!]` uses `|m|` in both
//! factorials. `P̄` is the associated Legendre function with the
//! Condon–Shortley phase removed, so the sign convention lives entirely in σ.
//! With the default σ (`(−1)^m` for `m > 0`, else `+1`) and `θ₀ = 0`, 𝓨
//! coincides with the standard complex `Y_ℓ^m`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quat::{ImaginaryUnit, Quaternion};
use crate::waves::lambda::LambdaSpec;
use crate::waves::legendre::{assoc_legendre, factorial_ratio};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum AzimuthalFactor {
    Lambda2 { theta0: f64 },
    Lambda3 { gamma0: f64, omega0: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// `(−1)^m` for `m > 0`, `+1` otherwise.
    pub fn condon_shortley(m: i32) -> Self {
        if m > 0 && m % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphericalHarmonicSpec {
    ell: u32,
    m: i32,
    factor: AzimuthalFactor,
    sigma: Sign,
    norm: f64,
}

impl SphericalHarmonicSpec {
    /// Validates `|m| ≤ ℓ`; σ defaults to the Condon–Shortley choice.
    pub fn new(ell: u32, m: i32, factor: AzimuthalFactor) -> Result<Self> {
        if m.unsigned_abs() > ell {
            return Err(Error::Domain(format!("|m| = {} exceeds ell = {ell}", m.unsigned_abs())));
        }
        let am = m.unsigned_abs();
        let norm = ((2 * ell + 1) as f64 / (4.0 * PI) * factorial_ratio(ell, am)).sqrt();
        Ok(Self {
            ell,
            m,
            factor,
            sigma: Sign::condon_shortley(m),
            norm,
        })
    }

    pub fn with_sigma(mut self, sigma: Sign) -> Self {
        self.sigma = sigma;
        self
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn factor(&self) -> AzimuthalFactor {
        self.factor
    }

    pub fn sigma(&self) -> Sign {
        self.sigma
    }

    /// The azimuthal Λ at wavenumber `m`.
    pub fn lambda(&self) -> LambdaSpec {
        let m = self.m as f64;
        match self.factor {
            AzimuthalFactor::Lambda2 { theta0 } => LambdaSpec::lambda2(m, theta0),
            AzimuthalFactor::Lambda3 { gamma0, omega0 } => LambdaSpec::lambda3(m, gamma0, omega0),
        }
    }

    /// The right unit under which 𝓨 is an L₃ eigenfunction.
    pub fn eta(&self) -> ImaginaryUnit {
        self.lambda().right_unit().expect("harmonics use Λ₂ or Λ₃")
    }

    /// θ-dependent real amplitude `σ N P̄_ℓ^{|m|}(cos θ)`.
    pub fn polar(&self, theta: f64) -> f64 {
        let am = self.m.unsigned_abs();
        let u = theta.cos().clamp(-1.0, 1.0);
        let p = assoc_legendre(self.ell, am as i32, u).expect("validated at construction");
        let strip = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        self.sigma.value() * self.norm * strip * p
    }

    pub fn eval(&self, theta: f64, phi: f64) -> Quaternion {
        self.lambda().eval(phi) * self.polar(theta)
    }
}

/// Evaluates 𝓨 at `(θ, φ)`.
pub fn eval_harmonic(spec: &SphericalHarmonicSpec, theta: f64, phi: f64) -> Quaternion {
    spec.eval(theta, phi)
}

/// Every `(ℓ, m)` with `ℓ ≤ ell_max`, for both azimuthal factors.
pub fn harmonic_family(ell_max: u32, theta0: f64, gamma0: f64, omega0: f64) -> Vec<SphericalHarmonicSpec> {
    let mut out = Vec::new();
    for factor in [
        AzimuthalFactor::Lambda2 { theta0 },
        AzimuthalFactor::Lambda3 { gamma0, omega0 },
    ] {
        for ell in 0..=ell_max {
            for m in -(ell as i32)..=(ell as i32) {
                out.push(SphericalHarmonicSpec::new(ell, m, factor).expect("|m| ≤ ell"));
            }
        }
    }
    out
}

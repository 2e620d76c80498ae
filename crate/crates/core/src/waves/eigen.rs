//! Grid verification of the Λ derivative eigen-relations and of
//! `d²Λ/dx² = −m²Λ`, with a two-resolution convergence estimate.

use serde::Serialize;

use crate::error::Result;
use crate::waves::grid::GridFunction1D;
use crate::waves::lambda::LambdaSpec;

/// Max-norm residuals on a single grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenResiduals {
    pub samples: usize,
    pub spacing: f64,
    /// `max |DΛ − μΛ|` (left eigenvalue form).
    pub first_left: Option<f64>,
    /// `max |DΛ − Λμ|` (right eigenvalue form).
    pub first_right: Option<f64>,
    /// `max |D²Λ + m²Λ|`.
    pub second: f64,
}

impl EigenResiduals {
    /// Worst first-derivative residual over the available forms.
    pub fn first(&self) -> f64 {
        self.first_left.unwrap_or(0.0).max(self.first_right.unwrap_or(0.0))
    }
}

pub fn eigen_residuals(spec: &LambdaSpec, samples: usize) -> Result<EigenResiduals> {
    let f = GridFunction1D::sample_lambda(spec, samples);
    let d1 = f.fd_derivative(1)?;
    let d2 = f.fd_derivative(2)?;
    let eig = spec.derivative_eigen();
    let m2 = spec.m * spec.m;

    let max_over = |g: &dyn Fn(usize) -> f64| (0..samples).map(g).fold(0.0, crate::exec::nan_max);

    let first_left = eig.left.map(|mu| max_over(&|k| d1.samples[k].dist(mu * f.samples[k])));
    let first_right = eig.right.map(|mu| max_over(&|k| d1.samples[k].dist(f.samples[k] * mu)));
    let second = max_over(&|k| (d2.samples[k] + f.samples[k] * m2).norm());

    Ok(EigenResiduals {
        samples,
        spacing: f.spacing(),
        first_left,
        first_right,
        second,
    })
}

/// Upper bounds on the central-difference residuals of a unit-norm Λ with
/// wavenumber `m` at spacing `h`: `|m|³h²/6` (first) and `m⁴h²/12` (second).
pub fn truncation_bounds(m: f64, h: f64) -> (f64, f64) {
    let m = m.abs();
    (m.powi(3) * h * h / 6.0, m.powi(4) * h * h / 12.0)
}

/// Observed order `log(r_c / r_f) / log(h_c / h_f)`.
pub fn observed_order(r_coarse: f64, r_fine: f64, h_coarse: f64, h_fine: f64) -> f64 {
    (r_coarse / r_fine).ln() / (h_coarse / h_fine).ln()
}

/// Residuals at `samples` and `2·samples` plus the observed orders.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceStudy {
    pub coarse: EigenResiduals,
    pub fine: EigenResiduals,
    /// `None` when the residuals vanish (e.g. `m = 0`).
    pub first_left_order: Option<f64>,
    pub first_right_order: Option<f64>,
    pub second_order: Option<f64>,
}

pub fn convergence_study(spec: &LambdaSpec, samples: usize) -> Result<ConvergenceStudy> {
    let coarse = eigen_residuals(spec, samples)?;
    let fine = eigen_residuals(spec, samples * 2)?;
    let order = |c: Option<f64>, f: Option<f64>| match (c, f) {
        (Some(c), Some(f)) if c > 0.0 && f > 0.0 => Some(observed_order(c, f, coarse.spacing, fine.spacing)),
        _ => None,
    };
    Ok(ConvergenceStudy {
        coarse,
        fine,
        first_left_order: order(coarse.first_left, fine.first_left),
        first_right_order: order(coarse.first_right, fine.first_right),
        second_order: order(Some(coarse.second), Some(fine.second)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::EPS_ALG;
    use crate::waves::lambda::LambdaVariant;

    #[test]
    fn zero_wavenumber_is_exact() {
        for v in LambdaVariant::ALL {
            let spec = LambdaSpec {
                variant: v,
                m: 0.0,
                theta0: 0.4,
                gamma0: 0.3,
                omega0: -0.2,
            };
            let r = eigen_residuals(&spec, 64).unwrap();
            assert!(r.first() <= EPS_ALG);
            assert!(r.second <= EPS_ALG);
            let study = convergence_study(&spec, 64).unwrap();
            assert!(study.second_order.is_none() || r.second > 0.0);
        }
    }

    #[test]
    fn residuals_respect_truncation_bounds() {
        let spec = LambdaSpec::lambda3(5.0, 0.3, 1.2);
        let r = eigen_residuals(&spec, 256).unwrap();
        let (b1, b2) = truncation_bounds(5.0, r.spacing);
        assert!(r.first_left.unwrap() <= b1 + 1e-12);
        assert!(r.first_right.unwrap() <= b1 + 1e-12);
        assert!(r.second <= b2 + 1e-12);
        // The bound is sharp to leading order.
        assert!(r.first_left.unwrap() > 0.9 * b1);
    }
}

//! L₃ and L² on a (Gauss–Legendre θ) × (uniform φ) sphere grid.
//!
//! `L₃ = −ħ(∂_φ | η)` uses the second-order central difference in φ.
//! `L²` is real and never touches η: θ derivatives are spectral (barycentric
//! Legendre differentiation in `u = cos θ`) and φ derivatives use the
//! periodic spectral second-derivative matrix. Odd azimuthal content carries
//! a `sin θ` factor, so the θ operator is applied to the φ→φ+π even part
//! directly and to the odd part divided by `sin θ`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::exec::{nan_max, Exec};
use crate::quat::{ImaginaryUnit, Quaternion};
use crate::waves::grid::GridFunction1D;
use crate::waves::harmonic::SphericalHarmonicSpec;
use crate::waves::quadrature::{GaussLegendre, DEFAULT_PHI_NODES, DEFAULT_THETA_NODES};

/// Values indexed `[θ-node][φ-index]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    pub theta: GaussLegendre,
    pub phi_count: usize,
    pub values: Vec<Quaternion>,
}

impl SphereGrid {
    pub fn sample(theta: &GaussLegendre, phi_count: usize, f: impl Fn(f64, f64) -> Quaternion) -> Self {
        let dphi = TAU / phi_count as f64;
        let mut values = Vec::with_capacity(theta.len() * phi_count);
        for &u in &theta.nodes {
            let t = u.acos();
            values.extend((0..phi_count).map(|k| f(t, k as f64 * dphi)));
        }
        Self {
            theta: theta.clone(),
            phi_count,
            values,
        }
    }

    pub fn sample_harmonic(spec: &SphericalHarmonicSpec, theta: &GaussLegendre, phi_count: usize) -> Self {
        Self::sample(theta, phi_count, |t, p| spec.eval(t, p))
    }

    /// Default 64 × 256 grid.
    pub fn sample_default(f: impl Fn(f64, f64) -> Quaternion) -> Self {
        Self::sample(&GaussLegendre::new(DEFAULT_THETA_NODES), DEFAULT_PHI_NODES, f)
    }

    pub fn theta_count(&self) -> usize {
        self.theta.len()
    }

    pub fn phi_spacing(&self) -> f64 {
        TAU / self.phi_count as f64
    }

    pub fn at(&self, t: usize, k: usize) -> Quaternion {
        self.values[t * self.phi_count + k]
    }

    fn same_shape(&self, other: &SphereGrid) -> Result<()> {
        if self.phi_count != other.phi_count || self.theta.nodes != other.theta.nodes {
            return Err(Error::Dimension("sphere grids have different shapes".into()));
        }
        Ok(())
    }

    pub fn max_dist(&self, other: &SphereGrid) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.dist(*b))
            .fold(0.0, nan_max))
    }

    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(|q| q.norm()).fold(0.0, nan_max)
    }

    pub fn scaled(&self, s: f64) -> SphereGrid {
        SphereGrid {
            theta: self.theta.clone(),
            phi_count: self.phi_count,
            values: self.values.iter().map(|q| *q * s).collect(),
        }
    }

    pub fn sub(&self, other: &SphereGrid) -> Result<SphereGrid> {
        self.same_shape(other)?;
        Ok(SphereGrid {
            theta: self.theta.clone(),
            phi_count: self.phi_count,
            values: self.values.iter().zip(&other.values).map(|(a, b)| *a - *b).collect(),
        })
    }

    /// `∫ Re[conj(self)·other] dΩ` by the product rule on the grid nodes.
    pub fn real_inner(&self, other: &SphereGrid) -> Result<f64> {
        self.same_shape(other)?;
        let dphi = self.phi_spacing();
        let mut total = 0.0;
        for (t, &w) in self.theta.weights.iter().enumerate() {
            let row = t * self.phi_count;
            let s: f64 = (0..self.phi_count)
                .map(|k| (self.values[row + k].conj() * other.values[row + k]).re())
                .sum();
            total += w * s * dphi;
        }
        Ok(total)
    }
}

/// `L₃ f = −ħ (∂_φ f) η` with the periodic central difference in φ.
pub fn l3_apply(f: &SphereGrid, eta: ImaginaryUnit, hbar: f64) -> Result<SphereGrid> {
    let n = f.phi_count;
    if n < 3 {
        return Err(Error::Resolution(format!("need at least 3 azimuthal nodes, got {n}")));
    }
    let scale = -hbar * 0.5 / f.phi_spacing();
    let e = eta.quat();
    let mut values = Vec::with_capacity(f.values.len());
    for row in f.values.chunks(n) {
        values.extend((0..n).map(|k| (row[(k + 1) % n] - row[(k + n - 1) % n]) * e * scale));
    }
    Ok(SphereGrid {
        theta: f.theta.clone(),
        phi_count: n,
        values,
    })
}

/// L₃ on a 1D φ grid.
pub fn l3_apply_line(f: &GridFunction1D, eta: ImaginaryUnit, hbar: f64) -> Result<GridFunction1D> {
    let d = f.fd_derivative(1)?;
    let e = eta.quat();
    Ok(GridFunction1D {
        samples: d.samples.iter().map(|q| *q * e * (-hbar)).collect(),
        domain_length: f.domain_length,
        periodic: true,
    })
}

/// First column of the periodic spectral second-derivative matrix on `n`
/// (even) equispaced nodes over `[0, 2π)`.
fn periodic_d2_column(n: usize) -> Vec<f64> {
    let h = TAU / n as f64;
    (0..n)
        .map(|d| {
            if d == 0 {
                -PI * PI / (3.0 * h * h) - 1.0 / 6.0
            } else {
                let s = (d as f64 * h / 2.0).sin();
                let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
                -sign / (2.0 * s * s)
            }
        })
        .collect()
}

fn matvec(d: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|i| d[i * n..(i + 1) * n].iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Operators reused across every column of a sphere grid.
struct PolarOps {
    u: Vec<f64>,
    s: Vec<f64>,
    d: Vec<f64>,
}

impl PolarOps {
    fn new(theta: &GaussLegendre) -> Self {
        let u = theta.nodes.clone();
        let s = u.iter().map(|x| ((1.0 - x) * (1.0 + x)).sqrt()).collect();
        Self {
            u,
            s,
            d: theta.differentiation_matrix(),
        }
    }

    /// `∂_u((1−u²) ∂_u f)` for `f` smooth in `u`.
    fn even(&self, f: &[f64]) -> Vec<f64> {
        let df = matvec(&self.d, f);
        let w: Vec<f64> = df.iter().zip(&self.u).map(|(v, u)| (1.0 - u * u) * v).collect();
        matvec(&self.d, &w)
    }

    /// Same operator for `f = sin θ · g` with `g` smooth in `u`:
    /// `s³ g'' − 4 u s g' + (u²/s − s) g`.
    fn odd(&self, f: &[f64]) -> Vec<f64> {
        let g: Vec<f64> = f.iter().zip(&self.s).map(|(v, s)| v / s).collect();
        let g1 = matvec(&self.d, &g);
        let g2 = matvec(&self.d, &g1);
        (0..g.len())
            .map(|i| {
                let (u, s) = (self.u[i], self.s[i]);
                s * s * s * g2[i] - 4.0 * u * s * g1[i] + (u * u / s - s) * g[i]
            })
            .collect()
    }
}

/// `L² f = −ħ² [ (1/sinθ) ∂_θ(sinθ ∂_θ f) + (1/sin²θ) ∂_φ² f ]`, applied to
/// each real component.
pub fn l2_apply(f: &SphereGrid, hbar: f64) -> Result<SphereGrid> {
    l2_apply_with(f, hbar, Exec::default())
}

pub fn l2_apply_with(f: &SphereGrid, hbar: f64, exec: Exec) -> Result<SphereGrid> {
    let np = f.phi_count;
    let nt = f.theta_count();
    if np < 4 || !np.is_multiple_of(2) {
        return Err(Error::Resolution(format!(
            "L² needs an even azimuthal count ≥ 4, got {np}"
        )));
    }
    let ops = PolarOps::new(&f.theta);
    let half = np / 2;

    // Polar part, one azimuthal column at a time.
    let columns: Vec<Vec<[f64; 4]>> = exec.map_index(np, |k| {
        let opp = (k + half) % np;
        let mut out = vec![[0.0; 4]; nt];
        #[allow(clippy::needless_range_loop)]
        for c in 0..4 {
            let even: Vec<f64> = (0..nt)
                .map(|t| 0.5 * (f.at(t, k).components()[c] + f.at(t, opp).components()[c]))
                .collect();
            let odd: Vec<f64> = (0..nt)
                .map(|t| 0.5 * (f.at(t, k).components()[c] - f.at(t, opp).components()[c]))
                .collect();
            let a = ops.even(&even);
            let b = ops.odd(&odd);
            for t in 0..nt {
                out[t][c] = a[t] + b[t];
            }
        }
        out
    });

    // Azimuthal part, one θ row at a time.
    let d2 = periodic_d2_column(np);
    let rows: Vec<Vec<Quaternion>> = exec.map_index(nt, |t| {
        let row = &f.values[t * np..(t + 1) * np];
        let inv_s2 = 1.0 / (ops.s[t] * ops.s[t]);
        // Rows of the matrix sum to zero; differencing against the centre
        // value keeps near-constant rows near the poles free of cancellation.
        (0..np)
            .map(|j| {
                let mut acc = Quaternion::ZERO;
                for (k, q) in row.iter().enumerate() {
                    if k != j {
                        acc += (*q - row[j]) * d2[(j + np - k) % np];
                    }
                }
                acc * inv_s2
            })
            .collect()
    });

    let mut values = Vec::with_capacity(nt * np);
    for t in 0..nt {
        for k in 0..np {
            let polar = Quaternion::from_components(columns[k][t]);
            values.push((polar + rows[t][k]) * (-hbar * hbar));
        }
    }
    Ok(SphereGrid {
        theta: f.theta.clone(),
        phi_count: np,
        values,
    })
}

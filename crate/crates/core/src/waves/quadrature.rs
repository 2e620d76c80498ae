//! Gauss–Legendre rules, barycentric differentiation on their nodes, and the
//! product rule used to integrate over the unit sphere.

use std::f64::consts::{PI, TAU};

use crate::quat::Quaternion;

/// Default number of Gauss–Legendre nodes in `cos θ`.
pub const DEFAULT_THETA_NODES: usize = 64;
/// Default number of uniform azimuthal nodes.
pub const DEFAULT_PHI_NODES: usize = 256;

/// Nodes (ascending in `[−1, 1]`) and weights of an `n`-point rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss–Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_and_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫₋₁¹ f(u) du`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Barycentric weights of the nodes, `(−1)^j √((1−x_j²) w_j)`.
    pub fn barycentric_weights(&self) -> Vec<f64> {
        self.nodes
            .iter()
            .zip(&self.weights)
            .enumerate()
            .map(|(j, (&x, &w))| {
                let s = ((1.0 - x * x) * w).sqrt();
                if j % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .collect()
    }

    /// Row-major first-derivative matrix of the polynomial interpolant through
    /// the nodes. Diagonal entries use the negative-sum identity.
    pub fn differentiation_matrix(&self) -> Vec<f64> {
        let n = self.len();
        let bw = self.barycentric_weights();
        let x = &self.nodes;
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            let mut diag = 0.0;
            for j in 0..n {
                if i != j {
                    let v = (bw[j] / bw[i]) / (x[i] - x[j]);
                    d[i * n + j] = v;
                    diag -= v;
                }
            }
            d[i * n + i] = diag;
        }
        d
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre in `cos θ` times the periodic trapezoid rule in φ.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereQuadrature {
    pub theta: GaussLegendre,
    pub phi_count: usize,
}

impl Default for SphereQuadrature {
    fn default() -> Self {
        Self::new(DEFAULT_THETA_NODES, DEFAULT_PHI_NODES)
    }
}

impl SphereQuadrature {
    pub fn new(theta_nodes: usize, phi_count: usize) -> Self {
        Self {
            theta: GaussLegendre::new(theta_nodes),
            phi_count,
        }
    }

    pub fn phi(&self, k: usize) -> f64 {
        TAU * k as f64 / self.phi_count as f64
    }

    /// `∫ f dΩ` for a real integrand given as `f(θ, φ)`.
    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        let dphi = TAU / self.phi_count as f64;
        let mut total = 0.0;
        for (&u, &w) in self.theta.nodes.iter().zip(&self.theta.weights) {
            let theta = u.acos();
            let row: f64 = (0..self.phi_count).map(|k| f(theta, self.phi(k))).sum();
            total += w * row * dphi;
        }
        total
    }

    /// `∫ Re[conj(a)·b] dΩ`.
    pub fn real_inner(&self, a: impl Fn(f64, f64) -> Quaternion, b: impl Fn(f64, f64) -> Quaternion) -> f64 {
        self.integrate(|t, p| (a(t, p).conj() * b(t, p)).re())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_monomials_exactly() {
        let gl = GaussLegendre::new(8);
        for k in 0..16 {
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            let got = gl.integrate(|u| u.powi(k));
            assert!((got - exact).abs() < 1e-14, "u^{k}: {got} vs {exact}");
        }
    }

    #[test]
    fn nodes_are_sorted_and_symmetric() {
        for n in [1, 2, 5, 64] {
            let gl = GaussLegendre::new(n);
            assert!(gl.nodes.windows(2).all(|w| w[0] < w[1]));
            for i in 0..n {
                assert!((gl.nodes[i] + gl.nodes[n - 1 - i]).abs() < 1e-15);
            }
            let total: f64 = gl.weights.iter().sum();
            assert!((total - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn differentiation_matrix_is_exact_on_polynomials() {
        let gl = GaussLegendre::new(12);
        let d = gl.differentiation_matrix();
        let n = gl.len();
        let f: Vec<f64> = gl.nodes.iter().map(|&x| x.powi(7) - 2.0 * x * x).collect();
        for i in 0..n {
            let x = gl.nodes[i];
            let df: f64 = (0..n).map(|j| d[i * n + j] * f[j]).sum();
            assert!((df - (7.0 * x.powi(6) - 4.0 * x)).abs() < 1e-11);
        }
    }

    #[test]
    fn sphere_area() {
        let q = SphereQuadrature::new(16, 32);
        assert!((q.integrate(|_, _| 1.0) - 4.0 * PI).abs() < 1e-12);
    }
}

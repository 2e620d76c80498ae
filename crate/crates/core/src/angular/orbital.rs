//! Orbital angular momentum `L_a = ε_abc x_b p_c` with `p_c = (−ħ∂_c | η)`,
//! discretized by central differences on a uniform cube, and the grid check
//! of `[L_a, L_b] = ħ ε_abc (L_c | η)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{nan_max, Exec};
use crate::quat::{ImaginaryUnit, Quaternion};
use crate::waves::eigen::observed_order;
use crate::waves::lambda::LambdaSpec;

/// Default cube resolution per axis.
pub const DEFAULT_CUBE_POINTS: usize = 32;
/// Cube is `[−5, 5]³`.
pub const DEFAULT_HALF_WIDTH: f64 = 5.0;
/// Boundary values must stay below this fraction of the peak value.
pub const SUPPORT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 0,
            Axis::X2 => 1,
            Axis::X3 => 2,
        }
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i % 3]
    }

    /// `(b, c)` with `(a, b, c)` cyclic.
    pub fn cyclic_rest(self) -> (Axis, Axis) {
        let a = self.index();
        (Axis::from_index(a + 1), Axis::from_index(a + 2))
    }
}

/// `ε_abc` and the axis `c` completing `(a, b)`; `(0, _)` when `a = b`.
pub fn levi_civita(a: Axis, b: Axis) -> (f64, Axis) {
    if a == b {
        return (0.0, a);
    }
    let c = Axis::from_index(3 - a.index() - b.index());
    let sign = if b == Axis::from_index(a.index() + 1) {
        1.0
    } else {
        -1.0
    };
    (sign, c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularMomentumOp {
    pub axis: Axis,
    pub eta: ImaginaryUnit,
    pub hbar: f64,
}

/// Samples on `n³` points of `[−w, w]³`, index `(i·n + j)·n + k` for
/// coordinates `(x₁, x₂, x₃)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeGrid {
    pub n: usize,
    pub half_width: f64,
    pub values: Vec<Quaternion>,
}

impl CubeGrid {
    pub fn sample(n: usize, half_width: f64, f: impl Fn([f64; 3]) -> Quaternion + Sync + Send, exec: Exec) -> Self {
        let h = 2.0 * half_width / (n - 1) as f64;
        let mut values = vec![Quaternion::ZERO; n * n * n];
        exec.for_each_chunk(&mut values, n * n, |i, slab| {
            let x1 = -half_width + i as f64 * h;
            for j in 0..n {
                let x2 = -half_width + j as f64 * h;
                for k in 0..n {
                    slab[j * n + k] = f([x1, x2, -half_width + k as f64 * h]);
                }
            }
        });
        Self { n, half_width, values }
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n - 1) as f64
    }

    fn coord(&self, idx: usize) -> [f64; 3] {
        let n = self.n;
        let h = self.spacing();
        let w = self.half_width;
        [
            -w + (idx / (n * n)) as f64 * h,
            -w + ((idx / n) % n) as f64 * h,
            -w + (idx % n) as f64 * h,
        ]
    }

    fn with_values(&self, values: Vec<Quaternion>) -> Self {
        Self {
            n: self.n,
            half_width: self.half_width,
            values,
        }
    }

    /// Central difference along `axis`; zero on that axis' boundary layer.
    fn partial(&self, axis: Axis, exec: Exec) -> Vec<Quaternion> {
        let n = self.n;
        let stride = [n * n, n, 1][axis.index()];
        let scale = 0.5 / self.spacing();
        let src = &self.values;
        let mut out = vec![Quaternion::ZERO; src.len()];
        exec.for_each_chunk(&mut out, n * n, |i, slab| {
            let base = i * n * n;
            for (off, cell) in slab.iter_mut().enumerate() {
                let idx = base + off;
                let pos = (idx / stride) % n;
                if pos > 0 && pos + 1 < n {
                    *cell = (src[idx + stride] - src[idx - stride]) * scale;
                }
            }
        });
        out
    }
}

impl AngularMomentumOp {
    pub fn new(axis: Axis, eta: ImaginaryUnit, hbar: f64) -> Self {
        Self { axis, eta, hbar }
    }

    /// `L_a f = −ħ (x_b ∂_c f − x_c ∂_b f) η` for cyclic `(a, b, c)`.
    pub fn apply_cube(&self, f: &CubeGrid, exec: Exec) -> CubeGrid {
        let (b, c) = self.axis.cyclic_rest();
        let dc = f.partial(c, exec);
        let db = f.partial(b, exec);
        let e = self.eta.quat();
        let hbar = self.hbar;
        let mut out = vec![Quaternion::ZERO; f.values.len()];
        let n2 = f.n * f.n;
        exec.for_each_chunk(&mut out, n2, |i, slab| {
            for (off, cell) in slab.iter_mut().enumerate() {
                let idx = i * n2 + off;
                let x = f.coord(idx);
                let d = dc[idx] * x[b.index()] - db[idx] * x[c.index()];
                *cell = d * e * (-hbar);
            }
        });
        f.with_values(out)
    }
}

/// `exp(−|x|²/2w²) · Λ(d·x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFunction {
    pub width: f64,
    pub lambda: LambdaSpec,
    pub direction: [f64; 3],
}

impl TestFunction {
    pub fn eval(&self, x: [f64; 3]) -> Quaternion {
        let r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        let s = x[0] * self.direction[0] + x[1] * self.direction[1] + x[2] * self.direction[2];
        self.lambda.eval(s) * (-r2 / (2.0 * self.width * self.width)).exp()
    }

    /// One Gaussian×Λ per Λ class, with unit width and wavenumber 1.
    pub fn default_set() -> Vec<TestFunction> {
        vec![
            TestFunction {
                width: 1.0,
                lambda: LambdaSpec::lambda1(1.0, 0.3),
                direction: [1.0, 0.0, 0.0],
            },
            TestFunction {
                width: 1.0,
                lambda: LambdaSpec::lambda2(1.0, 0.7),
                direction: [0.0, 1.0, 0.0],
            },
            TestFunction {
                width: 1.0,
                lambda: LambdaSpec::lambda3(1.0, 0.4, -0.3),
                direction: [0.0, 0.0, 1.0],
            },
        ]
    }
}

fn check_support(f: &CubeGrid) -> Result<()> {
    let n = f.n;
    let peak = f.values.iter().map(|q| q.norm()).fold(0.0, nan_max);
    let edge = f
        .values
        .iter()
        .enumerate()
        .filter(|(idx, _)| {
            let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
            [i, j, k].iter().any(|&p| p == 0 || p + 1 == n)
        })
        .map(|(_, q)| q.norm())
        .fold(0.0, nan_max);
    if edge > SUPPORT_TOL * peak {
        return Err(Error::Support(format!(
            "boundary value {edge:.3e} exceeds {SUPPORT_TOL:e} of peak {peak:.3e}"
        )));
    }
    Ok(())
}

/// `max_f max_interior |[L_a, L_b] f − ħ ε_abc (L_c f) η|` on an `n³` cube
/// of half-width `half_width`. Points within two cells of the boundary are
/// excluded because the composed stencils reach that far.
#[allow(clippy::too_many_arguments)]
pub fn orbital_commutator_check(
    a: Axis,
    b: Axis,
    eta: ImaginaryUnit,
    hbar: f64,
    tests: &[TestFunction],
    n: usize,
    half_width: f64,
    exec: Exec,
) -> Result<f64> {
    if n < 8 {
        return Err(Error::Resolution(format!(
            "cube needs at least 8 points per axis, got {n}"
        )));
    }
    let la = AngularMomentumOp::new(a, eta, hbar);
    let lb = AngularMomentumOp::new(b, eta, hbar);
    let (eps, c) = levi_civita(a, b);
    let lc = AngularMomentumOp::new(c, eta, hbar);
    let e = eta.quat();

    let mut worst = 0.0;
    for t in tests {
        let f = CubeGrid::sample(n, half_width, |x| t.eval(x), exec);
        check_support(&f)?;
        let lab = la.apply_cube(&lb.apply_cube(&f, exec), exec);
        let lba = lb.apply_cube(&la.apply_cube(&f, exec), exec);
        let rhs = if eps == 0.0 {
            None
        } else {
            Some(lc.apply_cube(&f, exec))
        };
        let interior: Vec<usize> = (0..f.values.len())
            .filter(|idx| {
                let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
                [i, j, k].iter().all(|&p| p >= 2 && p + 2 < n)
            })
            .collect();
        let r = exec.max_of(&interior, |&idx| {
            let comm = lab.values[idx] - lba.values[idx];
            let target = match &rhs {
                Some(g) => g.values[idx] * e * (hbar * eps),
                None => Quaternion::ZERO,
            };
            comm.dist(target)
        });
        worst = nan_max(worst, r);
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitalConvergence {
    pub coarse: f64,
    pub fine: f64,
    pub h_coarse: f64,
    pub h_fine: f64,
    pub order: f64,
}

/// Residuals at `n` and `2n` points per axis and the observed order.
#[allow(clippy::too_many_arguments)]
pub fn orbital_convergence(
    a: Axis,
    b: Axis,
    eta: ImaginaryUnit,
    hbar: f64,
    tests: &[TestFunction],
    n: usize,
    half_width: f64,
    exec: Exec,
) -> Result<OrbitalConvergence> {
    let coarse = orbital_commutator_check(a, b, eta, hbar, tests, n, half_width, exec)?;
    let fine = orbital_commutator_check(a, b, eta, hbar, tests, 2 * n, half_width, exec)?;
    let h_coarse = 2.0 * half_width / (n - 1) as f64;
    let h_fine = 2.0 * half_width / (2 * n - 1) as f64;
    Ok(OrbitalConvergence {
        coarse,
        fine,
        h_coarse,
        h_fine,
        order: observed_order(coarse, fine, h_coarse, h_fine),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_table() {
        assert_eq!(levi_civita(Axis::X1, Axis::X2), (1.0, Axis::X3));
        assert_eq!(levi_civita(Axis::X2, Axis::X3), (1.0, Axis::X1));
        assert_eq!(levi_civita(Axis::X3, Axis::X1), (1.0, Axis::X2));
        assert_eq!(levi_civita(Axis::X2, Axis::X1), (-1.0, Axis::X3));
        assert_eq!(levi_civita(Axis::X1, Axis::X1).0, 0.0);
    }

    #[test]
    fn same_axis_is_exactly_zero() {
        let r = orbital_commutator_check(
            Axis::X2,
            Axis::X2,
            ImaginaryUnit::i(),
            1.0,
            &TestFunction::default_set(),
            16,
            DEFAULT_HALF_WIDTH,
            Exec::default(),
        )
        .unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn wide_function_violates_support() {
        let wide = [TestFunction {
            width: 4.0,
            ..TestFunction::default_set()[0]
        }];
        let r = orbital_commutator_check(
            Axis::X1,
            Axis::X2,
            ImaginaryUnit::i(),
            1.0,
            &wide,
            16,
            DEFAULT_HALF_WIDTH,
            Exec::Sequential,
        );
        assert!(matches!(r, Err(Error::Support(_))));
    }

    #[test]
    fn l3_of_rotation_invariant_function_is_second_order_small() {
        // The exact L₃ annihilates a function of (x₁² + x₂², x₃); on the grid
        // only truncation error remains.
        let max_l3 = |n: usize| {
            let f = CubeGrid::sample(
                n,
                5.0,
                |x| Quaternion::scalar((-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 2.0).exp()),
                Exec::Sequential,
            );
            let l3 = AngularMomentumOp::new(Axis::X3, ImaginaryUnit::i(), 1.0).apply_cube(&f, Exec::Sequential);
            (l3.values.iter().map(|q| q.norm()).fold(0.0, f64::max), f.spacing())
        };
        let (r1, h1) = max_l3(24);
        let (r2, h2) = max_l3(48);
        let order = observed_order(r1, r2, h1, h2);
        assert!((order - 2.0).abs() < 0.2, "{order}");
    }
}

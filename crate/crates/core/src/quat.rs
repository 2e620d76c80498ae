//! Quaternion arithmetic in the Hamilton convention (`ij = k`, `jk = i`, `ki = j`).
//!
//! Besides the product itself this module carries the left-regular 4×4 real
//! representation, which is used throughout the test suites as an
//! independent oracle for every quaternion product.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance for algebraic identities on O(1) inputs.
pub const EPS_ALG: f64 = 1e-12;
/// Tolerance for unit-norm checks after repeated products.
pub const EPS_UNIT: f64 = 1e-9;

/// `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Row-major 4×4 real matrix.
pub type Mat4 = [[f64; 4]; 4];

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    #[inline]
    pub const fn scalar(s: f64) -> Self {
        Self::new(s, 0.0, 0.0, 0.0)
    }

    /// The complex number `re + im·i`.
    #[inline]
    pub const fn complex(re: f64, im: f64) -> Self {
        Self::new(re, im, 0.0, 0.0)
    }

    /// `(re + im·i)·j = re·j + im·k`.
    #[inline]
    pub const fn complex_j(re: f64, im: f64) -> Self {
        Self::new(0.0, 0.0, re, im)
    }

    /// `e^{iφ}`.
    #[inline]
    pub fn cis(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self::complex(c, s)
    }

    /// `e^{iφ}·j`.
    #[inline]
    pub fn cis_j(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self::complex_j(c, s)
    }

    #[inline]
    pub fn from_components(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub fn components(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Scalar (real) part.
    #[inline]
    pub fn re(self) -> f64 {
        self.w
    }

    /// Pure-imaginary part `x i + y j + z k`.
    #[inline]
    pub fn imag(self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    /// Multiplicative inverse; `None` for the zero quaternion.
    pub fn inverse(self) -> Option<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            None
        } else {
            Some(self.conj() / n2)
        }
    }

    /// Euclidean distance `|self − other|`.
    #[inline]
    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Componentwise comparison within `tol`.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.w - other.w).abs() <= tol
            && (self.x - other.x).abs() <= tol
            && (self.y - other.y).abs() <= tol
            && (self.z - other.z).abs() <= tol
    }

    /// Left-regular representation: `as_matrix4(a) · vec(b) = vec(a·b)`.
    pub fn as_matrix4(self) -> Mat4 {
        let Self { w, x, y, z } = self;
        [[w, -x, -y, -z], [x, w, -z, y], [y, z, w, -x], [z, -y, x, w]]
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn add(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.w + b.w, self.x + b.x, self.y + b.y, self.z + b.z)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, b: Quaternion) {
        *self = *self + b;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn sub(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.w - b.w, self.x - b.x, self.y - b.y, self.z - b.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

/// Product of two 4×4 real matrices.
pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    out
}

/// Largest absolute entry difference.
pub fn mat4_max_diff(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub const MAT4_IDENTITY: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// A pure-imaginary unit quaternion, i.e. a square root of −1.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    /// Accepts `q` if its scalar part vanishes and its norm is 1, both within
    /// [`EPS_UNIT`].
    pub fn new(q: Quaternion) -> Result<Self> {
        if q.w.abs() > EPS_UNIT || (q.norm() - 1.0).abs() > EPS_UNIT {
            return Err(Error::Domain(format!("{q} is not a pure-imaginary unit quaternion")));
        }
        Ok(Self(q))
    }

    pub fn i() -> Self {
        Self(Quaternion::I)
    }

    pub fn j() -> Self {
        Self(Quaternion::J)
    }

    pub fn k() -> Self {
        Self(Quaternion::K)
    }

    /// `e^{iδ}·j`. Note `e^{iδ}·j = j·e^{−iδ}`.
    pub fn phased_j(delta: f64) -> Self {
        Self(Quaternion::cis_j(delta))
    }

    #[inline]
    pub fn quat(self) -> Quaternion {
        self.0
    }

    /// `cos(angle) + sin(angle)·u`.
    #[inline]
    pub fn exp(self, angle: f64) -> Quaternion {
        exp_pure(self, angle)
    }
}

/// `cos(angle) + sin(angle)·u` for an imaginary unit `u`.
pub fn exp_pure(u: ImaginaryUnit, angle: f64) -> Quaternion {
    let (s, c) = angle.sin_cos();
    Quaternion::scalar(c) + u.quat() * s
}

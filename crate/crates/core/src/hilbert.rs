//! Two-component quaternionic spinors over a real Hilbert space.
//!
//! The inner product is `⟨a, b⟩ = Re[a† b]`. Operators are only real-linear:
//! a barred operator `(A|η)` acts as `Ψ ↦ (AΨ)·η`, and right multiplication
//! by η does not commute with right multiplication by an arbitrary
//! quaternion, so nothing here assumes quaternion-linearity.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::{ImaginaryUnit, Quaternion, EPS_UNIT};

/// Column `(up, down)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QSpinor {
    pub up: Quaternion,
    pub down: Quaternion,
}

impl QSpinor {
    pub const fn new(up: Quaternion, down: Quaternion) -> Self {
        Self { up, down }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `(up·q, down·q)`.
    pub fn right_mul(&self, q: Quaternion) -> Self {
        Self::new(self.up * q, self.down * q)
    }

    /// `(q·up, q·down)`.
    pub fn left_mul(&self, q: Quaternion) -> Self {
        Self::new(q * self.up, q * self.down)
    }

    pub fn components(&self) -> [f64; 8] {
        let [a, b, c, d] = self.up.components();
        let [e, f, g, h] = self.down.components();
        [a, b, c, d, e, f, g, h]
    }

    pub fn from_components(c: [f64; 8]) -> Self {
        Self::new(
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    /// The `k`-th element (0..8) of the real basis.
    pub fn basis(k: usize) -> Self {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Self::from_components(c)
    }

    /// All eight real basis spinors.
    pub fn real_basis() -> [QSpinor; 8] {
        std::array::from_fn(Self::basis)
    }

    /// Largest component deviation, measured as quaternion norms.
    pub fn dist(&self, other: &QSpinor) -> f64 {
        (*self - *other).norm()
    }
}

impl Add for QSpinor {
    type Output = QSpinor;
    fn add(self, b: QSpinor) -> QSpinor {
        QSpinor::new(self.up + b.up, self.down + b.down)
    }
}

impl Sub for QSpinor {
    type Output = QSpinor;
    fn sub(self, b: QSpinor) -> QSpinor {
        QSpinor::new(self.up - b.up, self.down - b.down)
    }
}

impl Neg for QSpinor {
    type Output = QSpinor;
    fn neg(self) -> QSpinor {
        QSpinor::new(-self.up, -self.down)
    }
}

impl Mul<f64> for QSpinor {
    type Output = QSpinor;
    fn mul(self, s: f64) -> QSpinor {
        QSpinor::new(self.up * s, self.down * s)
    }
}

/// `Re[a† b] = Re[conj(a.up)·b.up + conj(a.down)·b.down]`.
pub fn real_inner(a: &QSpinor, b: &QSpinor) -> f64 {
    (a.up.conj() * b.up + a.down.conj() * b.down).re()
}

/// 2×2 quaternion matrix acting from the left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QMatrix(pub [[Quaternion; 2]; 2]);

impl QMatrix {
    pub fn zero() -> Self {
        Self([[Quaternion::ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self([
            [Quaternion::scalar(m[0][0]), Quaternion::scalar(m[0][1])],
            [Quaternion::scalar(m[1][0]), Quaternion::scalar(m[1][1])],
        ])
    }

    /// σ₁.
    pub fn pauli_x() -> Self {
        Self::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    /// σ₃.
    pub fn pauli_z() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, -1.0]])
    }

    /// The real rotation generator `[[0, −1], [1, 0]]`. Right-multiplied by
    /// an imaginary unit it plays the role of σ₂.
    pub fn rotation() -> Self {
        Self::from_real([[0.0, -1.0], [1.0, 0.0]])
    }

    /// σ₂ with left-acting complex entries `[[0, −i], [i, 0]]`.
    pub fn pauli_y_left() -> Self {
        Self([[Quaternion::ZERO, -Quaternion::I], [Quaternion::I, Quaternion::ZERO]])
    }

    pub fn entry(&self, r: usize, c: usize) -> Quaternion {
        self.0[r][c]
    }

    pub fn apply(&self, psi: &QSpinor) -> QSpinor {
        let m = &self.0;
        QSpinor::new(
            m[0][0] * psi.up + m[0][1] * psi.down,
            m[1][0] * psi.up + m[1][1] * psi.down,
        )
    }

    pub fn matmul(&self, b: &QMatrix) -> QMatrix {
        let (a, b) = (&self.0, &b.0);
        QMatrix(std::array::from_fn(|r| {
            std::array::from_fn(|c| a[r][0] * b[0][c] + a[r][1] * b[1][c])
        }))
    }

    pub fn scale(&self, s: f64) -> QMatrix {
        QMatrix(self.0.map(|row| row.map(|q| q * s)))
    }

    pub fn conj_transpose(&self) -> QMatrix {
        let m = &self.0;
        QMatrix([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    /// Hermitian under quaternionic conjugate transpose: real diagonal,
    /// `entry(1,0) = conj(entry(0,1))`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let m = &self.0;
        m[0][0].imag().norm() <= tol && m[1][1].imag().norm() <= tol && m[1][0].dist(m[0][1].conj()) <= tol
    }

    /// Frobenius norm; bounds the operator norm from above.
    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Add for QMatrix {
    type Output = QMatrix;
    fn add(self, b: QMatrix) -> QMatrix {
        QMatrix(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c] + b.0[r][c])
        }))
    }
}

impl Sub for QMatrix {
    type Output = QMatrix;
    fn sub(self, b: QMatrix) -> QMatrix {
        self + b.scale(-1.0)
    }
}

/// `(A|η)`: apply `left`, then multiply every component by `eta` on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarredOp {
    pub left: QMatrix,
    pub eta: ImaginaryUnit,
}

impl BarredOp {
    pub fn new(left: QMatrix, eta: ImaginaryUnit) -> Self {
        Self { left, eta }
    }

    pub fn apply(&self, psi: &QSpinor) -> QSpinor {
        apply_barred(self, psi)
    }
}

/// `(op.left · psi) · op.eta`.
pub fn apply_barred(op: &BarredOp, psi: &QSpinor) -> QSpinor {
    op.left.apply(psi).right_mul(op.eta.quat())
}

/// Any real-linear map on spinors.
pub trait RealLinearMap: Sync {
    fn apply(&self, psi: &QSpinor) -> QSpinor;
}

impl RealLinearMap for QMatrix {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        QMatrix::apply(self, psi)
    }
}

impl RealLinearMap for BarredOp {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        apply_barred(self, psi)
    }
}

/// A spinor operator that is either a plain left matrix or barred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Operator {
    Matrix(QMatrix),
    Barred(BarredOp),
}

impl Operator {
    pub fn eta(&self) -> Option<ImaginaryUnit> {
        match self {
            Operator::Matrix(_) => None,
            Operator::Barred(b) => Some(b.eta),
        }
    }

    pub fn left(&self) -> &QMatrix {
        match self {
            Operator::Matrix(m) => m,
            Operator::Barred(b) => &b.left,
        }
    }
}

impl RealLinearMap for Operator {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        match self {
            Operator::Matrix(m) => m.apply(psi),
            Operator::Barred(b) => apply_barred(b, psi),
        }
    }
}

impl From<QMatrix> for Operator {
    fn from(m: QMatrix) -> Self {
        Operator::Matrix(m)
    }
}

impl From<BarredOp> for Operator {
    fn from(b: BarredOp) -> Self {
        Operator::Barred(b)
    }
}

/// `ψ ↦ a(b(ψ)) − b(a(ψ))`.
pub struct Commutator<'a> {
    a: &'a dyn RealLinearMap,
    b: &'a dyn RealLinearMap,
}

impl RealLinearMap for Commutator<'_> {
    fn apply(&self, psi: &QSpinor) -> QSpinor {
        self.a.apply(&self.b.apply(psi)) - self.b.apply(&self.a.apply(psi))
    }
}

/// Unchecked commutator of two arbitrary real-linear maps.
pub fn commutator<'a>(a: &'a dyn RealLinearMap, b: &'a dyn RealLinearMap) -> Commutator<'a> {
    Commutator { a, b }
}

/// Commutator of two operators that share the same right unit. Mixing two
/// different η is rejected.
pub fn barred_commutator<'a>(a: &'a Operator, b: &'a Operator) -> Result<Commutator<'a>> {
    if let (Some(ea), Some(eb)) = (a.eta(), b.eta()) {
        if ea != eb {
            return Err(Error::EtaMismatch);
        }
    }
    Ok(commutator(a, b))
}

/// How [`expectation`] treats a state whose norm is off by more than
/// [`EPS_UNIT`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormPolicy {
    #[default]
    Fail,
    /// Log a warning and renormalize.
    Renormalize,
}

/// `Re[ψ† (op ψ)]`.
pub fn expectation(op: &dyn RealLinearMap, psi: &QSpinor, policy: NormPolicy) -> Result<f64> {
    let n2 = psi.norm_sqr();
    if (n2 - 1.0).abs() > EPS_UNIT {
        match policy {
            NormPolicy::Fail => return Err(Error::Norm(n2)),
            NormPolicy::Renormalize => {
                log::warn!("renormalizing state with squared norm {n2}");
                let unit = *psi * (1.0 / n2.sqrt());
                return Ok(real_inner(&unit, &op.apply(&unit)));
            }
        }
    }
    Ok(real_inner(psi, &op.apply(psi)))
}

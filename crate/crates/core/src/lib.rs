//! Quaternionic quantum mechanics over a real Hilbert space.
//!
//! Hamilton quaternions, two-component quaternionic spinors with the real
//! inner product `Re[a†b]`, barred operators `(A|η)`, the Λ unit-quaternion
//! wave classes, quaternionic spherical harmonics, orbital and spin angular
//! momentum, and both quaternionic Larmor precession solutions.

pub mod angular;
pub mod error;
pub mod exec;
pub mod hilbert;
pub mod quat;
pub mod spin;
pub mod suite;
pub mod waves;

pub use error::{Error, Result};
pub use exec::Exec;
pub use hilbert::{BarredOp, NormPolicy, Operator, QMatrix, QSpinor, RealLinearMap};
pub use quat::{ImaginaryUnit, Quaternion};

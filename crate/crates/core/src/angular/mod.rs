//! Orbital angular momentum as barred operators.

pub mod orbital;
pub mod sphere;

pub use orbital::{
    levi_civita, orbital_commutator_check, orbital_convergence, AngularMomentumOp, Axis, CubeGrid, OrbitalConvergence,
    TestFunction,
};
pub use sphere::{l2_apply, l3_apply, l3_apply_line, SphereGrid};

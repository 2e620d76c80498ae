//! Spin-1/2 Larmor precession.

pub mod cases;
pub mod evolve;
pub mod larmor;

pub use cases::{
    case2_eta, expectations_case1, expectations_case2, mean_spin_sq_case1, numeric_expectations,
    numeric_second_moments, numeric_total_spin_sq, psi_case1, psi_case2, schrodinger_residual, sigma_s, Case1State,
    Case2State,
};
pub use evolve::{evolve_rk4, evolve_rk4_trajectory, trajectory_deviation, Deviation};
pub use larmor::{hamiltonian, observables, spin_operators, LarmorConfig, SpinSquared};

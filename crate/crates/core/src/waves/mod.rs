//! Λ function classes, periodic grids, associated Legendre functions and
//! quaternionic spherical harmonics.

pub mod eigen;
pub mod grid;
pub mod harmonic;
pub mod lambda;
pub mod legendre;
pub mod quadrature;

pub use eigen::{convergence_study, eigen_residuals, ConvergenceStudy, EigenResiduals};
pub use grid::{fd_derivative, GridFunction1D};
pub use harmonic::{eval_harmonic, AzimuthalFactor, Sign, SphericalHarmonicSpec};
pub use lambda::{eval_lambda, lambda_derivative_eigenvalue, EigenSide, LambdaSpec, LambdaVariant};
pub use legendre::assoc_legendre;
pub use quadrature::{GaussLegendre, SphereQuadrature};

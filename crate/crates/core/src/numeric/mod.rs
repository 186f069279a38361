//! High-precision evaluation and residual checks.

pub mod complex;
pub mod gamma;
pub mod hyp;
pub mod real;
pub mod verify;

pub use complex::BigComplex;
pub use gamma::{gamma, gamma_real};
pub use hyp::hyp2f1;
pub use real::Real;

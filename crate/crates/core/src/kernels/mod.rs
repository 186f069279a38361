//! Truncated hypergeometric products, terminating sums and their
//! special-point evaluations.

pub mod special;
pub mod terminating;
pub mod truncated;

pub use special::{eval_special, SpecialKind, SpecialValues};
pub use terminating::{f_k, f_k_vanishes_identically, pochhammer_affine};
pub use truncated::{p_euler, p_poly, phi, phi12_bridge, phi22_bridge, phi_euler};

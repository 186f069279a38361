//! Exact decision procedure, certificates and high-precision verification
//! for gamma product formulas of f(w) = 2F1(pw + a, 1/2; rw; x).

pub mod arguments;
pub mod certify;
pub mod contiguous;
pub mod data;
pub mod error;
pub mod exact;
pub mod kernels;
pub mod numeric;

pub use data::{HyperData, Region};
pub use error::{Error, Result};

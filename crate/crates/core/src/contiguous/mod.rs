//! Contiguous relations in matrix form.

pub mod lambda;
pub mod matrix;
pub mod ratfunc;
pub mod wxpoly;

pub use lambda::{extract_RQ, extract_phi, leading_y, A_of_lambda, PhiPolys};
pub use matrix::{basic_matrix, contig_product, BasicKind, Mat2, Params, ShiftVector};
pub use ratfunc::WxRatFunc;
pub use wxpoly::{Affine, WxPoly};

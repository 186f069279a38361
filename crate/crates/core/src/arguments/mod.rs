//! Root localization, integer invariants and degree bounds for psi_s.

pub mod polys;
pub mod roots;

pub use polys::{
    degree_classify, degree_report, delta_bound, delta_parity, integer_invariants, least_prime_factor, nontrivial_factor,
    phi_nontrivial, phi_poly, psi_poly, real_root_multiplicities, transport_to_x, x_of_s, y_of_s, DegreeClassification, DegreeReport, Invariants,
};
pub use roots::{c0, c_of_s, localize_roots, ComplexPair, NegativeRoot, RootReport};

pub mod algebraic;
pub mod irreducible;
pub mod logs;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use algebraic::{alg_is_root, isolate_root, AlgebraicReal};
pub use irreducible::{irreducibility_certify, Irreducibility};
pub use poly::{poly_gcd, UniPoly};
pub use rational::{parse_rational, rat, Rational};
pub use sturm::{sturm_count, Interval};

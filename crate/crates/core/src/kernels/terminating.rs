//! The renormalized hypergeometric polynomials F_k(beta; gamma; z).

use num_traits::{One, Zero};

use crate::contiguous::{Affine, WxRatFunc};
pub use crate::exact::rational::pochhammer;
use crate::exact::rational::{binomial, from_big, int, is_integer};
use crate::exact::{Rational, UniPoly};

/// (a)_k for an affine a(w), as an exact product.
pub fn pochhammer_affine(a: &Affine, k: usize) -> WxRatFunc {
    WxRatFunc::product(&a.pochhammer_factors(k))
}

/// F_k(beta; gamma; z) = sum_j (-1)^j C(k, j) (beta)_j (gamma + j)_{k-j} z^j.
pub fn f_k(k: usize, beta: &Rational, gamma: &Rational) -> UniPoly {
    let coeffs = (0..=k)
        .map(|j| {
            let c = from_big(binomial(k, j)) * pochhammer(beta, j) * pochhammer(&(gamma + int(j as i64)), k - j);
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    UniPoly::new(coeffs)
}

/// beta, gamma integers with 0 <= -beta <= -gamma <= k - 1.
pub fn f_k_vanishes_identically(k: usize, beta: &Rational, gamma: &Rational) -> bool {
    let v = is_integer(beta) && is_integer(gamma) && {
        let (nb, ng) = (-beta, -gamma);
        nb >= Rational::zero() && nb <= ng && ng <= int(k as i64) - Rational::one()
    };
    debug_assert_eq!(v, f_k(k, beta, gamma).is_zero(), "F_{k}({beta}; {gamma}) criterion");
    v
}

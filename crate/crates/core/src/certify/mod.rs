//! Deciding non-elementary gamma product formulas on the boundary q = 0,
//! b = 1/2, and assembling their certificates.

pub mod assemble;
pub mod search;
pub mod transforms;

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::arguments::x_of_s;
use crate::data::{half, HyperData, Region};
use crate::error::{Error, Result};
use crate::exact::rational::{as_i64, fmt_rational, int, is_integer};
use crate::exact::{alg_is_root, rat, AlgebraicReal, Rational};
use crate::kernels::f_k;

pub use assemble::{assemble_v, build_certificate, gamma_quotient, Constant, GpfCertificate};
pub use search::search;
pub use transforms::{dual, dual_v, gpf_multiple, multiple, multiple_v, reciprocal, reciprocal_v, square_symmetry, TransformKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Elementary,
    NonelementaryCandidate,
    Excluded(String),
}

/// Sorts data in the region I by the shape of b and the parity of p, r.
pub fn classify(lam: &HyperData) -> Result<Classification> {
    if lam.region() != Some(Region::I) {
        return Err(Error::Domain(format!("classification needs 0 < p < r, q = 0, 0 < x < 1: {lam}")));
    }
    if is_integer(&lam.b) && !lam.b.is_positive() {
        return Ok(Classification::Elementary);
    }
    if lam.b != half() {
        return Ok(Classification::Excluded(format!("b = {} is neither 1/2 nor a nonpositive integer", fmt_rational(&lam.b))));
    }
    if (lam.r - lam.p) % 2 != 0 {
        return Ok(Classification::Excluded(format!("p = {} and r = {} have different parity", lam.p, lam.r)));
    }
    Ok(Classification::NonelementaryCandidate)
}

/// chi(j, k; s) = -(j + (s - 1)(k - 1/2))/s.
pub fn chi(j: i64, k: i64, s: i64) -> Rational {
    -(int(j) + int(s - 1) * (int(k) - half())) / int(s)
}

/// The first way in which (p, s, j, j') fails the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NscFailure {
    Parity { p: i64, s: i64 },
    FProduct { k: i64, k_prime: i64 },
}

fn check_indices(p: i64, s: i64, j: i64, jp: i64) -> Result<()> {
    if s < 2 || p < 1 || j < 0 || jp < 0 || j + jp != s - 2 {
        return Err(Error::Precondition(format!("need s >= 2, p >= 1, j, j' >= 0, j + j' = s - 2; got p={p} s={s} j={j} j'={jp}")));
    }
    Ok(())
}

/// F_k(chi(j, k; s); 1/2 - k; z) vanishes at x.
fn factor_vanishes(j: i64, k: i64, s: i64, x: &AlgebraicReal) -> bool {
    let f = f_k(k as usize, &chi(j, k, s), &(half() - int(k)));
    f.is_zero() || alg_is_root(&f, x)
}

/// The criterion with its first failure; `x` must be the root of phi_s in (0, 1).
pub fn nsc_detail_at(p: i64, s: i64, j: i64, jp: i64, x: &AlgebraicReal) -> Result<Option<NscFailure>> {
    check_indices(p, s, j, jp)?;
    if (p * (s - 1)).is_odd() {
        return Ok(Some(NscFailure::Parity { p, s }));
    }
    let r = p * s;
    for k in 0..r {
        let kp = r - 1 - k;
        if !factor_vanishes(j, k, s, x) && !factor_vanishes(jp, kp, s, x) {
            return Ok(Some(NscFailure::FProduct { k, k_prime: kp }));
        }
    }
    Ok(None)
}

pub fn nsc_detail(p: i64, s: i64, j: i64, jp: i64) -> Result<Option<NscFailure>> {
    check_indices(p, s, j, jp)?;
    nsc_detail_at(p, s, j, jp, &x_of_s(s)?)
}

pub fn nsc_certify(p: i64, s: i64, j: i64, jp: i64) -> Result<bool> {
    Ok(nsc_detail(p, s, j, jp)?.is_none())
}

/// Why `certify` declined to produce a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    Elementary,
    Excluded(String),
    RatioNotInteger { p: i64, r: i64 },
    Parity { p: i64, s: i64 },
    NotJOverS { a: Rational, s: i64 },
    FProduct { k: i64, k_prime: i64 },
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::Elementary => write!(f, "elementary: b is a nonpositive integer"),
            Refusal::Excluded(why) => write!(f, "excluded: {why}"),
            Refusal::RatioNotInteger { p, r } => write!(f, "s = r/p = {r}/{p} is not an integer >= 2"),
            Refusal::Parity { p, s } => write!(f, "parity: p(s-1) = {} is odd", p * (s - 1)),
            Refusal::NotJOverS { a, s } => write!(f, "a = {} is not of the form j/s with s = {s} and 0 <= j <= s-2", fmt_rational(a)),
            Refusal::FProduct { k, k_prime } => write!(f, "F-product criterion fails at k = {k}, k' = {k_prime}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Certified(Box<GpfCertificate>),
    Refused(Refusal),
}

/// j with a = j/s and 0 <= j <= s - 2.
pub fn j_of_a(a: &Rational, s: i64) -> Option<i64> {
    let j = as_i64(&(a * int(s)))?;
    (0..=s - 2).contains(&j).then_some(j)
}

/// Decides (p, 0, r; a, 1/2; x_s) and certifies it when the criterion holds.
/// The argument x is always the root of phi_s in (0, 1), s = r/p.
pub fn certify(p: i64, r: i64, a: &Rational, precision: usize) -> Result<Outcome> {
    if !(0 < p && p < r) {
        return Err(Error::Domain(format!("need 0 < p < r, got p = {p}, r = {r}")));
    }
    if r % p != 0 {
        if (r - p) % 2 != 0 {
            return Ok(Outcome::Refused(Refusal::Excluded(format!("p = {p} and r = {r} have different parity"))));
        }
        return Ok(Outcome::Refused(Refusal::RatioNotInteger { p, r }));
    }
    let s = r / p;
    let x = x_of_s(s)?;
    let lam = HyperData::boundary(p, r, a.clone(), x.clone());
    match classify(&lam)? {
        Classification::Elementary => return Ok(Outcome::Refused(Refusal::Elementary)),
        Classification::Excluded(_) => return Ok(Outcome::Refused(Refusal::Parity { p, s })),
        Classification::NonelementaryCandidate => {}
    }
    let Some(j) = j_of_a(a, s) else {
        return Ok(Outcome::Refused(Refusal::NotJOverS { a: a.clone(), s }));
    };
    match nsc_detail_at(p, s, j, s - 2 - j, &x)? {
        Some(NscFailure::Parity { p, s }) => Ok(Outcome::Refused(Refusal::Parity { p, s })),
        Some(NscFailure::FProduct { k, k_prime }) => Ok(Outcome::Refused(Refusal::FProduct { k, k_prime })),
        None => {
            let base = primitive_base(p, s, j, &x)?;
            Ok(Outcome::Certified(Box::new(build_certificate(lam, s, j, base, precision)?)))
        }
    }
}

/// Smallest p0 | p with (p0, s, j) certified; kλ0 = λ for k = p/p0.
pub fn primitive_base(p: i64, s: i64, j: i64, x: &AlgebraicReal) -> Result<i64> {
    for d in 1..p {
        if p % d == 0 && nsc_detail_at(d, s, j, s - 2 - j, x)?.is_none() {
            return Ok(d);
        }
    }
    Ok(p)
}

/// The three independent verdicts on (p, s, j): the F-product criterion,
/// Phi = 0 from truncated products, and Q = 0 from the contiguous matrix.
pub fn three_way(p: i64, s: i64, j: i64) -> Result<[bool; 3]> {
    let x = x_of_s(s)?;
    let nsc = nsc_detail_at(p, s, j, s - 2 - j, &x)?.is_none();
    let lam = HyperData::boundary(p, p * s, rat(j, s), x.clone());
    let phi = crate::kernels::phi(&lam)?;
    let phi_zero = phi.coeffs().iter().all(|c| alg_is_root(c, &x));
    let (_, q) = crate::contiguous::extract_RQ(&crate::contiguous::A_of_lambda(&lam)?);
    let q_zero = crate::contiguous::lambda::vanishes_at(&q, &x);
    Ok([nsc, phi_zero, q_zero])
}

/// a = j/s for the certificate indices.
pub fn a_of_j(j: i64, s: i64) -> Rational {
    rat(j, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;

    #[test]
    fn classification_examples() {
        let x = AlgebraicReal::from_rational(rat(1, 2));
        let el = HyperData::new(1, 0, 3, int(0), int(-2), x.clone());
        assert_eq!(classify(&el).unwrap(), Classification::Elementary);
        let ex = HyperData::boundary(1, 3, int(0), AlgebraicReal::from_rational(rat(3, 4)));
        assert_eq!(classify(&ex).unwrap(), Classification::NonelementaryCandidate);
        let x2 = x_of_s(2).unwrap();
        let odd = HyperData::boundary(1, 2, int(0), x2);
        assert!(matches!(classify(&odd).unwrap(), Classification::Excluded(_)));
        let outside = HyperData::boundary(-1, 2, int(0), x);
        assert!(classify(&outside).is_err());
    }

    #[test]
    fn chi_and_spot_factor() {
        assert_eq!(chi(0, 1, 3), rat(-1, 3));
        assert_eq!(chi(1, 1, 3), rat(-2, 3));
        let x = rat(3, 4);
        let f1 = f_k(1, &chi(0, 1, 3), &rat(-1, 2)).eval(&x);
        let f2 = f_k(1, &chi(1, 1, 3), &rat(-1, 2)).eval(&x);
        assert_eq!(f1, rat(-1, 4));
        assert_eq!(f2, int(0));
        // by the defining sum, F_1(b; g; z) = g - b z
        assert_eq!(f_k(1, &rat(-2, 3), &rat(-1, 2)), UniPoly::new(vec![rat(-1, 2), rat(2, 3)]));
    }

    #[test]
    fn criterion_examples() {
        assert!(nsc_certify(1, 3, 0, 1).unwrap());
        assert!(nsc_certify(1, 3, 1, 0).unwrap());
        assert!(nsc_certify(2, 2, 0, 0).unwrap());
        assert!(!nsc_certify(1, 2, 0, 0).unwrap());
        assert_eq!(nsc_detail(1, 2, 0, 0).unwrap(), Some(NscFailure::Parity { p: 1, s: 2 }));
        assert!(nsc_certify(1, 3, 0, 0).is_err());
        assert!(nsc_certify(0, 3, 0, 1).is_err());
    }

    #[test]
    fn refusals() {
        let r = |p, r, a: Rational| match certify(p, r, &a, 128).unwrap() {
            Outcome::Refused(why) => why,
            Outcome::Certified(c) => panic!("unexpected certificate {:?}", c.lambda),
        };
        assert_eq!(r(1, 2, int(0)), Refusal::Parity { p: 1, s: 2 });
        assert_eq!(r(1, 3, rat(1, 7)), Refusal::NotJOverS { a: rat(1, 7), s: 3 });
        assert_eq!(r(2, 5, int(0)), Refusal::Excluded("p = 2 and r = 5 have different parity".into()));
        assert!(r(1, 2, int(0)).to_string().contains("odd"));
        assert!(certify(3, 2, &int(0), 128).is_err());
    }
}

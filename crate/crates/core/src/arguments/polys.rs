//! The polynomials phi_s and psi_s, the argument x, integer invariants of the
//! nontrivial roots, and the degree bound.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::logs::ln_enclosure;
use crate::exact::rational::{int, pow};
use crate::exact::{irreducibility_certify, isolate_root, AlgebraicReal, Interval, Irreducibility, Rational, UniPoly};

fn check_s(s: i64, min: i64) -> Result<()> {
    if s < min {
        return Err(Error::Precondition(format!("s = {s} must be at least {min}")));
    }
    Ok(())
}

/// (s-1)^(s-1) z^s - s^s (1-z)^(s-1)
pub fn phi_poly(s: i64) -> Result<UniPoly> {
    check_s(s, 2)?;
    let k = (s - 1) as u32;
    let a = UniPoly::monomial(pow(&int(s - 1), k), s as usize);
    let one_minus = UniPoly::from_ints(&[1, -1]);
    let b = one_minus.pow(k).scale(&pow(&int(s), s as u32));
    Ok(&a - &b)
}

/// z^(s-1) (z + s) - (s-1)^(s-1)
pub fn psi_poly(s: i64) -> Result<UniPoly> {
    check_s(s, 2)?;
    let k = (s - 1) as u32;
    let lead = &UniPoly::monomial(Rational::one(), k as usize) * &UniPoly::from_ints(&[s, 1]);
    Ok(&lead - &UniPoly::constant(pow(&int(s - 1), k)))
}

/// psi_s with the trivial double root 1 - s removed when s is odd.
pub fn nontrivial_factor(s: i64) -> Result<UniPoly> {
    let psi = psi_poly(s)?;
    if s % 2 == 0 {
        return Ok(psi);
    }
    let sq = UniPoly::from_ints(&[s - 1, 1]).pow(2);
    let (q, r) = psi.div_rem(&sq);
    if !r.is_zero() {
        return Err(Error::Invariant(format!("(z + {})^2 does not divide psi_{s}", s - 1)));
    }
    Ok(q)
}

/// phi_s with the trivial double root z = s removed when s is odd.
pub fn phi_nontrivial(s: i64) -> Result<UniPoly> {
    let phi = phi_poly(s)?;
    if s % 2 == 0 {
        return Ok(phi);
    }
    let sq = UniPoly::from_ints(&[-s, 1]).pow(2);
    let (q, r) = phi.div_rem(&sq);
    if !r.is_zero() {
        return Err(Error::Invariant(format!("(z - {s})^2 does not divide phi_{s}")));
    }
    Ok(q.primitive())
}

/// The unique root of phi_s in (0, 1).
pub fn x_of_s(s: i64) -> Result<AlgebraicReal> {
    let f = phi_nontrivial(s)?;
    isolate_root(&f, &Interval::new(Rational::zero(), Rational::one()))
}

/// The unique positive root y of psi_s; x = s/(y + s).
pub fn y_of_s(s: i64) -> Result<AlgebraicReal> {
    let f = nontrivial_factor(s)?;
    isolate_root(&f, &Interval::new(Rational::zero(), int(s - 1)))
}

/// Transport a polynomial P(y) to x = s/(y + s): returns x^d P(s(1 - x)/x).
pub fn transport_to_x(s: i64, p: &UniPoly) -> UniPoly {
    let d = p.degree().unwrap_or(0);
    let num = UniPoly::from_ints(&[s, -s]);
    let x = UniPoly::z();
    let mut acc = UniPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = &num.pow(k as u32) * &x.pow((d - k) as u32);
        acc = &acc + &term.scale(c);
    }
    acc
}

pub fn least_prime_factor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition(format!("least prime factor of {n}")));
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return Ok(d);
        }
        d += 1;
    }
    Ok(n)
}

/// Certified rational lower bound on (log q)(s-1)/(1 + log(s-1)).
fn log_ratio_lower(q: u64, s: i64, bits: u32) -> Rational {
    let lq = ln_enclosure(&int(q as i64), bits);
    let ls = ln_enclosure(&int(s - 1), bits);
    &lq.lo * &int(s - 1) / (Rational::one() + &ls.hi)
}

fn log_ratio_upper(q: u64, s: i64, bits: u32) -> Rational {
    let lq = ln_enclosure(&int(q as i64), bits);
    let ls = ln_enclosure(&int(s - 1), bits);
    &lq.hi * &int(s - 1) / (Rational::one() + &ls.lo)
}

const DELTA_BITS: u32 = 64;

/// Certified enclosure of delta(s) built on the least prime factor of s - 1.
pub fn delta_bound(s: i64) -> Result<Interval> {
    check_s(s, 3)?;
    let ps = least_prime_factor((s - 1) as u64)?;
    Ok(Interval::new(log_ratio_lower(ps, s, DELTA_BITS), log_ratio_upper(ps, s, DELTA_BITS)))
}

/// Certified enclosure of the parity bound: log 3 for even s, log 2 for odd s.
pub fn delta_parity(s: i64) -> Result<Interval> {
    check_s(s, 2)?;
    let q = if s % 2 == 0 { 3 } else { 2 };
    Ok(Interval::new(log_ratio_lower(q, s, DELTA_BITS), log_ratio_upper(q, s, DELTA_BITS)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub m: BigInt,
    pub n_norm: BigInt,
    pub n: BigInt,
    pub d: usize,
}

/// M = (-1)^d P(-s), N = (-1)^d P(0), n = (s-1)^d / N for the nontrivial
/// factor P of psi_s; s = 2 returns (M, N, d) = (-1, -1, 2) and n = -1.
pub fn integer_invariants(s: i64) -> Result<Invariants> {
    check_s(s, 2)?;
    let p = nontrivial_factor(s)?;
    let d = p.degree().unwrap_or(0);
    let sign = if d % 2 == 0 { Rational::one() } else { -Rational::one() };
    let m = &sign * p.eval(&int(-s));
    let nn = &sign * p.eval(&Rational::zero());
    let to_int = |q: &Rational, what: &str| -> Result<BigInt> {
        if !q.is_integer() {
            return Err(Error::Invariant(format!("{what} = {q} is not an integer")));
        }
        Ok(q.to_integer())
    };
    let m = to_int(&m, "M")?;
    let nn = to_int(&nn, "N")?;
    if nn.is_zero() {
        return Err(Error::Invariant("N = 0".into()));
    }
    let sd = num_traits::pow(BigInt::from(s - 1), d);
    if (&sd % &nn) != BigInt::zero() {
        return Err(Error::Invariant(format!("n = {sd}/{nn} is not an integer")));
    }
    let n = &sd / &nn;
    let inv = Invariants { m, n_norm: nn, n, d };
    if s >= 3 {
        let failed = lemma_violations(s, &inv);
        if !failed.is_empty() {
            return Err(Error::Invariant(format!("integer invariants at s = {s}: {}", failed.join(", "))));
        }
    }
    Ok(inv)
}

/// Names of the divisibility and magnitude constraints that fail.
pub fn lemma_violations(s: i64, inv: &Invariants) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let s1 = BigInt::from(s - 1);
    if inv.n.is_zero() || (&s1 % &inv.n) != BigInt::zero() {
        bad.push("n | s-1");
    }
    if inv.n.abs() < BigInt::from(2) {
        bad.push("|n| >= 2");
    }
    if inv.m != num_traits::pow(inv.n.clone(), (s - 1) as usize) {
        bad.push("M = n^(s-1)");
    }
    if &inv.n * &inv.n_norm != num_traits::pow(s1, inv.d) {
        bad.push("n N = (s-1)^d");
    }
    bad
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub s: i64,
    /// Least prime factor of s - 1 (absent for s = 2).
    pub p_s: Option<u64>,
    /// Lower and upper ends of the delta(s) enclosure.
    pub delta: Option<(Rational, Rational)>,
    /// Degrees of the irreducible factors of the nontrivial factor, when certified.
    pub factor_degrees: Vec<usize>,
    pub irreducible: Option<bool>,
    pub invariants: Option<Invariants>,
}

pub fn degree_report(s: i64) -> Result<DegreeReport> {
    check_s(s, 2)?;
    let p = nontrivial_factor(s)?;
    let (factor_degrees, irreducible) = match irreducibility_certify(&p) {
        Irreducibility::Irreducible { .. } => (vec![p.degree().unwrap_or(0)], Some(true)),
        Irreducibility::Composite { factor } => {
            let fd = factor.degree().unwrap_or(0);
            let rest = p.degree().unwrap_or(0) - fd;
            (vec![fd, rest], Some(false))
        }
        Irreducibility::Unknown => (Vec::new(), None),
    };
    let (p_s, delta) = if s >= 3 {
        let d = delta_bound(s)?;
        (Some(least_prime_factor((s - 1) as u64)?), Some((d.lo, d.hi)))
    } else {
        (None, None)
    };
    Ok(DegreeReport { s, p_s, delta, factor_degrees, irreducible, invariants: Some(integer_invariants(s)?) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClassification {
    pub max_deg: usize,
    /// s values the parity bound cannot exclude.
    pub candidates: Vec<i64>,
    /// Candidates whose argument x has certified degree at most max_deg, or
    /// whose degree could not be certified.
    pub refined: Vec<i64>,
}

/// s values with possibly deg x <= max_deg.
pub fn degree_classify(max_deg: usize) -> Result<DegreeClassification> {
    if max_deg < 1 {
        return Err(Error::Precondition("max_deg must be at least 1".into()));
    }
    let bound = int(max_deg as i64);
    let mut candidates = Vec::new();
    // s = 2 always has deg x = 2
    if max_deg >= 2 {
        candidates.push(2);
    }
    let mut s = 3i64;
    let mut past = [false, false];
    while !(past[0] && past[1]) {
        let lo = delta_parity(s)?.lo;
        if lo < bound {
            candidates.push(s);
        } else {
            // the parity bounds increase with s
            past[(s % 2) as usize] = true;
        }
        s += 1;
    }
    let mut refined = Vec::new();
    for &s in &candidates {
        let y = y_of_s(s)?;
        let p = y.defining().clone();
        let deg = match irreducibility_certify(&p) {
            Irreducibility::Irreducible { .. } => Some(p.degree().unwrap_or(0)),
            _ => None,
        };
        if deg.map_or(true, |d| d <= max_deg) {
            refined.push(s);
        }
    }
    Ok(DegreeClassification { max_deg, candidates, refined })
}

/// Exact real root count of psi_s with multiplicity (positive, negative).
pub fn real_root_multiplicities(s: i64) -> Result<(usize, usize)> {
    let psi = psi_poly(s)?;
    let sf = psi.squarefree_part();
    let big = psi.root_bound();
    let pos = crate::exact::sturm_count(&sf, &Interval::new(Rational::zero(), big.clone()))?;
    let neg_distinct = crate::exact::sturm_count(&sf, &Interval::new(-big, -dyadic_small()))?;
    let neg = if s % 2 == 1 { neg_distinct + 1 } else { neg_distinct };
    Ok((pos, neg))
}

fn dyadic_small() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1u64 << 20))
}

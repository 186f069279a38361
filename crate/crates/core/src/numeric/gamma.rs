//! Euler's gamma function at arbitrary precision: shift the argument to large
//! real part, sum the Stirling series with exact Bernoulli numbers, and
//! reflect for Re w < 1/2.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::BigComplex;
use super::real::Real;
use crate::error::{Error, Result};
use crate::exact::rational::binomial;
use crate::exact::Rational;

const GUARD: usize = 32;

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// B_0 .. B_n with the convention B_1 = -1/2.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = bernoulli_cache().lock().expect("bernoulli cache");
    while b.len() <= n {
        let m = b.len();
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += Rational::from_integer(binomial(m + 1, k)) * bk;
            }
        }
        let next = -acc / Rational::from_integer(BigInt::from(m as u64 + 1));
        b.push(next);
    }
    b[..=n].to_vec()
}

/// Real part the argument is shifted to before the asymptotic series.
fn shift_target(p: usize) -> i64 {
    (p as i64 / 4).max(12)
}

/// log Gamma(z) by the Stirling series; requires Re z large (see shift_target).
fn ln_gamma_stirling(z: &BigComplex, p: usize) -> Result<BigComplex> {
    let half_ln_2pi = Real::pi(p).scale(2).ln().scale_frac(1, 2);
    let lnz = z.ln();
    let half = BigComplex::real(Real::from_rational(&Rational::new(1.into(), 2.into()), p));
    let mut acc = &(&(z - &half) * &lnz) - z;
    acc = &acc + &BigComplex::real(half_ln_2pi);
    let zr = z.recip();
    let zr2 = &zr * &zr;
    let mut zpow = zr.clone();
    let eps_exp = -(p as i64) - 8;
    let mut prev: Option<i64> = None;
    let mut k = 1usize;
    loop {
        let b = bernoulli(2 * k);
        let coef = &b[2 * k] / Rational::from_integer(BigInt::from((2 * k * (2 * k - 1)) as u64));
        let term = zpow.scale(&Real::from_rational(&coef, p));
        let mag = exponent(&term.abs());
        acc = &acc + &term;
        if mag.map_or(true, |m| m < eps_exp) {
            break;
        }
        if let (Some(m), Some(pm)) = (mag, prev) {
            if m > pm {
                return Err(Error::Numeric("Stirling series diverged before reaching the tolerance".into()));
            }
        }
        prev = mag;
        zpow = &zpow * &zr2;
        k += 1;
        if k > 4 * p {
            return Err(Error::Numeric("Stirling series did not converge".into()));
        }
    }
    Ok(acc)
}

/// Binary exponent of a real (None for zero).
pub fn exponent(x: &Real) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        x.raw().exponent().map(|e| e as i64)
    }
}

pub fn gamma(w: &BigComplex, precision: usize) -> Result<BigComplex> {
    let p = precision + GUARD;
    let w = BigComplex::new(w.re.with_prec(p), w.im.with_prec(p));
    if w.im.is_zero() {
        if let Some(q) = w.re.to_rational() {
            if q.is_integer() && q <= Rational::zero() {
                return Err(Error::Numeric(format!("gamma pole at {q}")));
            }
        }
    }
    let half = Real::from_rational(&Rational::new(1.into(), 2.into()), p);
    let v = if w.re < half {
        // Gamma(w) Gamma(1-w) = pi / sin(pi w)
        let pi = BigComplex::real(Real::pi(p));
        let one = BigComplex::one(p);
        let s = (&pi * &w).sin();
        if s.is_zero() {
            return Err(Error::Numeric("gamma pole".into()));
        }
        let g1 = gamma_shifted(&(&one - &w), p)?;
        &pi / &(&s * &g1)
    } else {
        gamma_shifted(&w, p)?
    };
    Ok(BigComplex::new(v.re.with_prec(precision), v.im.with_prec(precision)))
}

fn gamma_shifted(w: &BigComplex, p: usize) -> Result<BigComplex> {
    let target = shift_target(p);
    let re = w.re.to_f64();
    let n = if re >= target as f64 { 0 } else { (target as f64 - re).ceil() as i64 };
    let mut z = w.clone();
    let mut prod = BigComplex::one(p);
    for _ in 0..n {
        prod = &prod * &z;
        z = &z + &BigComplex::one(p);
    }
    let lg = ln_gamma_stirling(&z, p)?;
    Ok(&lg.exp() / &prod)
}

pub fn gamma_real(w: &Rational, precision: usize) -> Result<Real> {
    Ok(gamma(&BigComplex::from_rational(w, precision), precision)?.re)
}

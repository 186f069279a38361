//! Gauss hypergeometric series summed directly inside the unit disk.

use super::complex::BigComplex;
use super::gamma::exponent;
use super::real::Real;
use crate::error::{Error, Result};

const GUARD: usize = 24;
const MAX_TERMS: usize = 1_000_000;

/// 2F1(alpha, beta; gamma; z) for |z| < 1.
///
/// The sum stops once the geometric tail bound
/// |t_n| rho / (1 - rho), rho = |z| (n + |alpha|)/(n - |gamma|) max(1, (n + |beta|)/(n + 1)),
/// drops below 2^-(precision + 8) relative to the partial sum.  For n > |gamma|
/// rho bounds every later term ratio.
pub fn hyp2f1(alpha: &BigComplex, beta: &BigComplex, gamma: &BigComplex, z: &BigComplex, precision: usize) -> Result<BigComplex> {
    let p = precision + GUARD;
    let za = z.abs().to_f64();
    if !(za < 1.0) {
        return Err(Error::Numeric(format!("|z| = {za} outside the disk of convergence")));
    }
    let lift = |c: &BigComplex| BigComplex::new(c.re.with_prec(p), c.im.with_prec(p));
    let (a, b, c, z) = (lift(alpha), lift(beta), lift(gamma), lift(z));
    let (aa, ba, ca) = (a.abs().to_f64(), b.abs().to_f64(), c.abs().to_f64());
    let one = BigComplex::one(p);
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut n = 0usize;
    let target = -(precision as i64) - 8;
    loop {
        let nn = BigComplex::from_i64(n as i64, p);
        let den = &(&c + &nn) * &(&nn + &one);
        if den.is_zero() {
            return Err(Error::Numeric("denominator parameter hits a nonpositive integer".into()));
        }
        term = &(&(&term * &(&a + &nn)) * &(&b + &nn)) / &den;
        term = &term * &z;
        n += 1;
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
        let nf = n as f64;
        if nf > ca + 1.0 {
            let rho = za * (nf + aa) / (nf - ca) * ((nf + ba) / (nf + 1.0)).max(1.0);
            if rho < 1.0 {
                let tail = (rho / (1.0 - rho)).log2();
                let t = exponent(&term.abs()).unwrap_or(i64::MIN / 2);
                let s = exponent(&sum.abs()).unwrap_or(0);
                if (t - s) as f64 + tail < target as f64 {
                    return Ok(sum);
                }
            }
        }
        if n > MAX_TERMS {
            return Err(Error::Numeric("series did not converge".into()));
        }
    }
}

pub fn hyp2f1_real(alpha: &Real, beta: &Real, gamma: &Real, z: &Real, precision: usize) -> Result<Real> {
    let c = |r: &Real| BigComplex::real(r.clone());
    Ok(hyp2f1(&c(alpha), &c(beta), &c(gamma), &c(z), precision)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64, p: usize) -> BigComplex {
        BigComplex::from_rational(&rat(n, d), p)
    }

    fn rel(a: &BigComplex, b: &BigComplex) -> i64 {
        exponent(&(a - b).abs()).unwrap_or(-100_000) - exponent(&b.abs()).unwrap_or(0)
    }

    #[test]
    fn value_at_zero_and_terminating() {
        let p = 128;
        let v = hyp2f1(&q(3, 7, p), &q(-2, 3, p), &q(5, 4, p), &BigComplex::zero(p), p).unwrap();
        assert_eq!(v.re.to_rational().unwrap(), rat(1, 1));
        // 2F1(-2, 1; 1; z) = (1 - z)^2
        let v = hyp2f1(&q(-2, 1, p), &q(1, 1, p), &q(1, 1, p), &q(1, 3, p), p).unwrap();
        assert_eq!(v.re.to_decimal(30), Real::from_rational(&rat(4, 9), p).to_decimal(30));
    }

    #[test]
    fn closed_forms() {
        let p = 256;
        // 2F1(1, 1; 2; z) = -ln(1 - z)/z
        let z = q(3, 4, p);
        let v = hyp2f1(&q(1, 1, p), &q(1, 1, p), &q(2, 1, p), &z, p).unwrap();
        let expect = -(Real::from_rational(&rat(1, 4), p).ln()) / Real::from_rational(&rat(3, 4), p);
        assert!(rel(&v, &BigComplex::real(expect)) < -(p as i64) + 4);
        // 2F1(a, b; b; z) = (1 - z)^-a
        let v = hyp2f1(&q(2, 5, p), &q(7, 3, p), &q(7, 3, p), &q(-1, 2, p), p).unwrap();
        let expect = Real::from_rational(&rat(3, 2), p).powr(&Real::from_rational(&rat(-2, 5), p));
        assert!(rel(&v, &BigComplex::real(expect)) < -(p as i64) + 4);
    }

    #[test]
    fn parameter_symmetry_random() {
        let p = 160;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let mut c = || BigComplex::from_f64(rng.gen_range(-2.0..3.0), rng.gen_range(-1.0..1.0), p);
            let (a, b, g, z0) = (c(), c(), c(), c());
            let z = z0.scale(&Real::from_f64(0.25, p));
            let g = &g + &BigComplex::from_i64(4, p);
            let v1 = hyp2f1(&a, &b, &g, &z, p).unwrap();
            let v2 = hyp2f1(&b, &a, &g, &z, p).unwrap();
            assert!(rel(&v1, &v2) < -(p as i64) + 8);
        }
    }

    #[test]
    fn euler_transformation() {
        let p = 256;
        let (a, b, c, z) = (q(3, 10, p), q(7, 10, p), q(11, 10, p), q(1, 2, p));
        let lhs = hyp2f1(&a, &b, &c, &z, p).unwrap();
        let e = &(&c - &a) - &b;
        let one = BigComplex::one(p);
        let rhs = &(&one - &z).pow(&e) * &hyp2f1(&(&c - &a), &(&c - &b), &c, &z, p).unwrap();
        assert!(rel(&lhs, &rhs) < -(p as i64) + 8);
    }

    #[test]
    fn logarithmic_closed_form() {
        // 2F1(1, 1; 3; z) = 2((1 - z) ln(1 - z) + z) / z^2
        let p = 200;
        let z = Real::from_rational(&rat(1, 2), p);
        let v = hyp2f1(&q(1, 1, p), &q(1, 1, p), &q(3, 1, p), &BigComplex::real(z.clone()), p).unwrap();
        let one = Real::one(p);
        let om = &one - &z;
        let expect = (&(&om * &om.ln()) + &z).scale(2) / (&z * &z);
        assert!(rel(&v, &BigComplex::real(expect)) < -(p as i64) + 6);
    }

    #[test]
    fn rejects_bad_arguments() {
        let p = 64;
        assert!(hyp2f1(&q(1, 2, p), &q(1, 2, p), &q(-2, 1, p), &q(1, 2, p), p).is_err());
        assert!(hyp2f1(&q(1, 2, p), &q(1, 2, p), &q(1, 1, p), &q(1, 1, p), p).is_err());
    }
}

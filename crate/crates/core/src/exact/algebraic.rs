//! Real algebraic numbers as (squarefree polynomial, isolating interval).

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::poly::{poly_gcd, UniPoly};
use super::rational::Rational;
use super::sturm::{dyadic, Interval, SturmChain};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicReal {
    defining: UniPoly,
    interval: Interval,
}

/// Default refinement width 2^-32.
pub const ISOLATION_BITS: u32 = 32;

impl AlgebraicReal {
    pub fn from_rational(q: Rational) -> Self {
        AlgebraicReal { defining: UniPoly::linear_root(&q).primitive(), interval: Interval::point(q) }
    }

    /// Rebuilds from serialized parts, re-checking the isolation invariant.
    pub fn from_parts(defining: UniPoly, interval: Interval) -> Result<Self> {
        let chain = SturmChain::new(&defining)?;
        let sf = chain.poly().clone();
        let ok = if interval.lo == interval.hi {
            sf.eval(&interval.lo).is_zero()
        } else {
            chain.count(&interval.lo, &interval.hi) == 1
                && (sf.eval(&interval.hi).is_zero() || sf.sign_at(&interval.lo) * sf.sign_at(&interval.hi) < 0)
        };
        if !ok {
            return Err(Error::Invariant(format!(
                "interval [{}, {}] does not isolate a root of {sf}",
                interval.lo, interval.hi
            )));
        }
        let sf = sf.primitive();
        if interval.lo != interval.hi && sf.eval(&interval.hi).is_zero() {
            return Ok(AlgebraicReal { defining: sf, interval: Interval::point(interval.hi) });
        }
        Ok(AlgebraicReal { defining: sf, interval })
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.interval.lo == self.interval.hi {
            Some(self.interval.lo.clone())
        } else {
            None
        }
    }

    pub fn degree(&self) -> usize {
        self.defining.degree().unwrap_or(0)
    }

    /// Refine by bisection until the width is at most 2^-bits.
    pub fn refine(&self, bits: u32) -> AlgebraicReal {
        if self.as_rational().is_some() {
            return self.clone();
        }
        let target = dyadic(bits);
        let f = &self.defining;
        let (mut lo, mut hi) = (self.interval.lo.clone(), self.interval.hi.clone());
        let slo = f.sign_at(&lo);
        while &hi - &lo > target {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            let sm = f.sign_at(&mid);
            if sm == 0 {
                return AlgebraicReal { defining: f.clone(), interval: Interval::point(mid) };
            }
            if sm == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        AlgebraicReal { defining: f.clone(), interval: Interval::new(lo, hi) }
    }

    /// Compare with a rational; exact.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(q);
        }
        if q <= &self.interval.lo {
            return Ordering::Greater;
        }
        if q >= &self.interval.hi {
            return Ordering::Less;
        }
        if self.defining.eval(q).is_zero() {
            return Ordering::Equal;
        }
        // q strictly inside: the root sits on the side where the sign changes
        let slo = self.defining.sign_at(&self.interval.lo);
        if self.defining.sign_at(q) == slo {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// 1 - self, transporting the defining polynomial.
    pub fn one_minus(&self) -> AlgebraicReal {
        let g = UniPoly::new(vec![Rational::one(), -Rational::one()]);
        let defining = self.defining.compose(&g).primitive();
        let one = Rational::one();
        AlgebraicReal {
            defining,
            interval: Interval::new(&one - &self.interval.hi, &one - &self.interval.lo),
        }
    }

    pub fn midpoint(&self) -> Rational {
        self.interval.mid()
    }
}

/// Isolate the unique root of `f` in (lo, hi].
pub fn isolate_root(f: &UniPoly, iv: &Interval) -> Result<AlgebraicReal> {
    let chain = SturmChain::new(f)?;
    let n = chain.count(&iv.lo, &iv.hi);
    if n != 1 {
        return Err(Error::RootCount(n));
    }
    let sf = chain.poly().primitive();
    if sf.degree() == Some(1) {
        let q = -sf.coeff(0) / sf.coeff(1);
        return Ok(AlgebraicReal::from_rational(q));
    }
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    if sf.eval(&hi).is_zero() {
        return Ok(AlgebraicReal { defining: sf, interval: Interval::point(hi) });
    }
    // move lo off a neighbouring root so the endpoints bracket a sign change
    while sf.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if sf.eval(&mid).is_zero() {
            if chain.count(&mid, &hi) == 0 {
                return Ok(AlgebraicReal { defining: sf, interval: Interval::point(mid) });
            }
            lo = mid;
        } else if chain.count(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = AlgebraicReal { defining: sf, interval: Interval::new(lo, hi) };
    Ok(a.refine(ISOLATION_BITS))
}

/// Exact decision of g(alpha) = 0.
pub fn alg_is_root(g: &UniPoly, alpha: &AlgebraicReal) -> bool {
    if let Some(q) = alpha.as_rational() {
        return g.eval(&q).is_zero();
    }
    let h = poly_gcd(g, &alpha.defining);
    if h.degree().unwrap_or(0) == 0 {
        return g.is_zero();
    }
    SturmChain::new(&h).map(|c| c.count(&alpha.interval.lo, &alpha.interval.hi) == 1).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::sturm::sturm_count;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    fn unit() -> Interval {
        Interval::new(int(0), int(1))
    }

    #[test]
    fn sturm_examples() {
        let psi2 = p(&[-1, 2, 1]);
        assert_eq!(sturm_count(&psi2, &unit()).unwrap(), 1);
        // 4z^3 - 27(1-z)^2
        let phi3 = p(&[-27, 54, -27, 4]);
        assert_eq!(sturm_count(&phi3, &unit()).unwrap(), 1);
        let psi4 = p(&[-27, 0, 0, 4, 1]);
        assert_eq!(sturm_count(&psi4, &Interval::new(int(0), int(3))).unwrap(), 1);
        assert!(sturm_count(&UniPoly::zero(), &unit()).is_err());
    }

    #[test]
    fn sturm_is_additive() {
        let f = p(&[6, -11, 6, -1]); // roots 1, 2, 3
        let a = sturm_count(&f, &Interval::new(int(0), rat(3, 2))).unwrap();
        let b = sturm_count(&f, &Interval::new(rat(3, 2), int(4))).unwrap();
        assert_eq!(a + b, sturm_count(&f, &Interval::new(int(0), int(4))).unwrap());
        assert_eq!(a, 1);
        // (lo, hi] includes hi
        assert_eq!(sturm_count(&f, &Interval::new(int(1), int(2))).unwrap(), 1);
    }

    #[test]
    fn isolate_examples() {
        let phi2 = p(&[-4, 4, 1]);
        let x2 = isolate_root(&phi2, &unit()).unwrap();
        assert!(x2.interval().width() <= dyadic(32));
        let lo: f64 = num_traits::ToPrimitive::to_f64(&x2.interval().lo).unwrap();
        assert!((lo - (2.0 * 2f64.sqrt() - 2.0)).abs() < 1e-9);

        let phi3 = p(&[-27, 54, -27, 4]);
        assert_eq!(isolate_root(&phi3, &unit()).unwrap().as_rational(), Some(rat(3, 4)));
        assert_eq!(isolate_root(&p(&[-5, 1]), &Interval::new(int(0), int(10))).unwrap().as_rational(), Some(int(5)));
        assert!(matches!(isolate_root(&p(&[6, -11, 6, -1]), &Interval::new(int(0), int(4))), Err(Error::RootCount(3))));
    }

    #[test]
    fn isolate_with_root_at_lower_end() {
        // roots 1 and sqrt(2); start the search exactly on 1
        let f = &p(&[-1, 1]) * &p(&[-2, 0, 1]);
        let a = isolate_root(&f, &Interval::new(int(1), int(2))).unwrap();
        assert!(a.cmp_rational(&rat(141, 100)) == Ordering::Greater);
        assert!(a.cmp_rational(&rat(142, 100)) == Ordering::Less);
        assert!(!a.defining().eval(&a.interval().lo).is_zero());
    }

    #[test]
    fn zero_tests() {
        let phi3 = p(&[-27, 54, -27, 4]);
        let x3 = isolate_root(&phi3, &unit()).unwrap();
        assert!(alg_is_root(&UniPoly::linear_root(&rat(3, 4)), &x3));
        assert!(!alg_is_root(&UniPoly::linear_root(&rat(1, 2)), &x3));
        let phi2 = p(&[-4, 4, 1]);
        let x2 = isolate_root(&phi2, &unit()).unwrap();
        assert!(alg_is_root(&phi2, &x2));
        assert!(alg_is_root(&UniPoly::zero(), &x2));
        assert!(!alg_is_root(&p(&[-2, 0, 1]), &x2));
        // other root of phi2 is -2-2sqrt2, not in the interval
        assert!(alg_is_root(&(&phi2 * &p(&[3, 1])), &x2));
    }

    #[test]
    fn one_minus_transport() {
        let x2 = isolate_root(&p(&[-4, 4, 1]), &unit()).unwrap();
        let y = x2.one_minus();
        // 3 - 2 sqrt 2 is a root of z^2 - 6z + 1
        assert!(alg_is_root(&p(&[1, -6, 1]), &y));
        assert_eq!(y.cmp_rational(&rat(17, 100)), Ordering::Greater);
        assert_eq!(y.cmp_rational(&rat(18, 100)), Ordering::Less);
    }

    #[test]
    fn from_parts_checks_isolation() {
        let f = p(&[-2, 0, 1]);
        assert!(AlgebraicReal::from_parts(f.clone(), Interval::new(int(1), int(2))).is_ok());
        assert!(AlgebraicReal::from_parts(f.clone(), Interval::new(int(-2), int(2))).is_err());
        assert!(AlgebraicReal::from_parts(f, Interval::new(int(2), int(3))).is_err());
    }
}

//! Certified rational enclosures of natural logarithms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};
use super::sturm::{dyadic, Interval};

/// Enclosure of 2*atanh(t) for 0 <= t < 1 with width below 2^-bits.
fn atanh2(t: &Rational, bits: u32) -> Interval {
    if t.is_zero() {
        return Interval::point(Rational::zero());
    }
    let eps = dyadic(bits + 2);
    let t2 = t * t;
    let one = Rational::one();
    let mut sum = Rational::zero();
    let mut pw = t.clone();
    let mut k = 0i64;
    loop {
        sum += &pw / int(2 * k + 1);
        pw *= &t2;
        k += 1;
        // tail: sum_{i>=k} t^{2i+1}/(2i+1) <= t^{2k+1} / ((2k+1)(1-t^2))
        let tail = &pw / (int(2 * k + 1) * (&one - &t2));
        if tail < eps {
            let two = int(2);
            return Interval::new(&sum * &two, (&sum + &tail) * &two);
        }
    }
}

/// Certified enclosure of ln(q) for rational q > 0.
pub fn ln_enclosure(q: &Rational, bits: u32) -> Interval {
    assert!(q.is_positive(), "logarithm of a non-positive rational");
    // q = m * 2^e with m in [1, 2)
    let mut e: i64 = q.numer().bits() as i64 - q.denom().bits() as i64;
    let two = int(2);
    let scale = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(BigInt::one() << e as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
        }
    };
    let mut m = q / scale(e);
    while m >= two {
        m /= &two;
        e += 1;
    }
    while m < Rational::one() {
        m *= &two;
        e -= 1;
    }
    let extra = 64 - (e.unsigned_abs().max(1)).leading_zeros() + 2;
    let lm = atanh2(&((&m - int(1)) / (&m + int(1))), bits + 1);
    let l2 = atanh2(&Rational::new(1.into(), 3.into()), bits + extra);
    let ek = int(e);
    let (a, b) = if e >= 0 { (&l2.lo * &ek, &l2.hi * &ek) } else { (&l2.hi * &ek, &l2.lo * &ek) };
    Interval::new(lm.lo + a, lm.hi + b)
}

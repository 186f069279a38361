//! Sturm sequences and real root counting.

use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rational::{denom_lcm, Rational};
use crate::error::{Error, Result};

/// Closed rational interval; root counts use the half-open (lo, hi].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }
}

/// Rescale by a positive constant so the coefficients are coprime integers.
/// Signs are preserved, which Sturm chains rely on.
fn positive_normalize(f: &UniPoly) -> UniPoly {
    if f.is_zero() {
        return f.clone();
    }
    let l = denom_lcm(f.coeffs());
    let ints: Vec<_> = f.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
    UniPoly::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<UniPoly>,
}

impl SturmChain {
    /// Chain of the squarefree part of `f`.
    pub fn new(f: &UniPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = positive_normalize(&f.squarefree_part());
        let mut seq = vec![f.clone()];
        let mut prev = f.clone();
        let mut cur = positive_normalize(&f.derivative());
        while !cur.is_zero() {
            seq.push(cur.clone());
            let r = prev.div_rem(&cur).1;
            prev = cur;
            cur = positive_normalize(&-&r);
        }
        Ok(SturmChain { seq })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.seq[0]
    }

    pub fn variations(&self, t: &Rational) -> usize {
        let mut last = 0i32;
        let mut v = 0;
        for p in &self.seq {
            let s = p.sign_at(t);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in (lo, hi].
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }
}

/// Number of distinct real roots of `f` in (lo, hi].
pub fn sturm_count(f: &UniPoly, iv: &Interval) -> Result<usize> {
    Ok(SturmChain::new(f)?.count(&iv.lo, &iv.hi))
}

/// Number of distinct real roots on the whole line.
pub fn real_root_count(f: &UniPoly) -> Result<usize> {
    let b = f.root_bound();
    Ok(SturmChain::new(f)?.count(&-&b, &b))
}

pub fn two() -> Rational {
    Rational::from_integer(2.into())
}

pub fn dyadic(k: u32) -> Rational {
    Rational::new(One::one(), num_bigint::BigInt::one() << k)
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

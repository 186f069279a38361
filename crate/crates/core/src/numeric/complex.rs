//! Complex numbers over [`Real`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real::Real;
use crate::exact::Rational;

#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: Real,
    pub im: Real,
}

impl BigComplex {
    pub fn new(re: Real, im: Real) -> Self {
        BigComplex { re, im }
    }

    pub fn real(re: Real) -> Self {
        let p = re.prec();
        BigComplex { re, im: Real::zero(p) }
    }

    pub fn zero(p: usize) -> Self {
        Self::real(Real::zero(p))
    }

    pub fn one(p: usize) -> Self {
        Self::real(Real::one(p))
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Self::real(Real::from_i64(n, p))
    }

    pub fn from_rational(q: &Rational, p: usize) -> Self {
        Self::real(Real::from_rational(q, p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        BigComplex { re: Real::from_f64(re, p), im: Real::from_f64(im, p) }
    }

    pub fn precision_bits(&self) -> usize {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.re.is_nan() || self.im.is_nan()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Real {
        atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &Real) -> Self {
        BigComplex { re: &self.re * k, im: &self.im * k }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        if self.im.is_zero() {
            return Self::real(m);
        }
        BigComplex { re: &m * &self.im.cos(), im: &m * &self.im.sin() }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        if self.im.is_zero() && self.re.is_positive() {
            return Self::real(self.re.ln());
        }
        BigComplex { re: self.norm_sqr().ln().scale_frac(1, 2), im: self.arg() }
    }

    pub fn sin(&self) -> Self {
        if self.im.is_zero() {
            return Self::real(self.re.sin());
        }
        let (sh, ch) = sinh_cosh(&self.im);
        BigComplex { re: &self.re.sin() * &ch, im: &self.re.cos() * &sh }
    }

    /// self^e through the principal logarithm.
    pub fn pow(&self, e: &BigComplex) -> Self {
        (&self.ln() * e).exp()
    }

    pub fn powi(&self, n: usize) -> Self {
        let mut acc = Self::one(self.precision_bits());
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Distance from the nearest integer n with n <= 0 (used for pole checks).
    pub fn dist_to_nonpositive_integer(&self) -> f64 {
        let re = self.re.to_f64();
        let im = self.im.to_f64();
        let n = if re > 0.0 { 0.0 } else { re.round() };
        ((re - n).powi(2) + im * im).sqrt()
    }

    /// Distance from the nearest integer.
    pub fn dist_to_integer(&self) -> f64 {
        let re = self.re.to_f64();
        let im = self.im.to_f64();
        ((re - re.round()).powi(2) + im * im).sqrt()
    }
}

impl Real {
    /// self * num / den.
    pub fn scale_frac(&self, num: i64, den: i64) -> Real {
        let p = self.prec();
        &(self * &Real::from_i64(num, p)) / &Real::from_i64(den, p)
    }
}

pub fn atan2(y: &Real, x: &Real) -> Real {
    let p = y.prec().max(x.prec());
    if x.is_zero() {
        let h = Real::pi(p).scale_frac(1, 2);
        return if y.is_negative() { -h } else if y.is_zero() { Real::zero(p) } else { h };
    }
    let base = (y / x).atan();
    if x.is_positive() {
        base
    } else if y.is_negative() {
        &base - &Real::pi(p)
    } else {
        &base + &Real::pi(p)
    }
}

fn sinh_cosh(t: &Real) -> (Real, Real) {
    let e = t.exp();
    let ie = e.recip();
    ((&e - &ie).scale_frac(1, 2), (&e + &ie).scale_frac(1, 2))
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, o: &BigComplex) -> BigComplex {
        if self.im.is_zero() && o.im.is_zero() {
            let re = &self.re * &o.re;
            let p = re.prec();
            return BigComplex { re, im: Real::zero(p) };
        }
        BigComplex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, o: &BigComplex) -> BigComplex {
        if o.im.is_zero() {
            return BigComplex { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        self * &o.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                (&self).$m(&o)
            }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: &BigComplex) -> BigComplex {
                (&self).$m(o)
            }
        }
    };
}

owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

//! Arbitrary-precision reals over astro-float with operator overloading.
//! Precision travels with each value; binary operations use the larger one.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

pub const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

fn biguint_to_float(n: &BigUint, p: usize) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_u8(0, p);
    }
    let words = n.to_u64_digits();
    let bits = n.bits() as i64;
    let len = words.len();
    // the top word must carry the leading bit
    let shift = (64 * len as u64 - bits as u64) as usize;
    let aligned: BigUint = n << shift;
    let m = aligned.to_u64_digits();
    let mut f = BigFloat::from_words(&m, Sign::Pos, bits as i32);
    let _ = f.set_precision(p, RM);
    f
}

impl Real {
    pub fn from_float(v: BigFloat, p: usize) -> Self {
        Real { v, p }
    }

    pub fn zero(p: usize) -> Self {
        Real { v: BigFloat::from_u8(0, p), p }
    }

    pub fn one(p: usize) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Real { v: BigFloat::from_i64(n, p), p }
    }

    pub fn from_f64(x: f64, p: usize) -> Self {
        Real { v: BigFloat::from_f64(x, p), p }
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        let mut v = biguint_to_float(n.magnitude(), p);
        if n.is_negative() {
            v.inv_sign();
        }
        Real { v, p }
    }

    pub fn from_rational(q: &Rational, p: usize) -> Self {
        let guard = p + 16;
        let n = Self::from_bigint(q.numer(), guard);
        let d = Self::from_bigint(q.denom(), guard);
        (&n / &d).with_prec(p)
    }

    pub fn prec(&self) -> usize {
        self.p
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    pub fn with_prec(&self, p: usize) -> Self {
        let mut v = self.v.clone();
        let _ = v.set_precision(p, RM);
        Real { v, p }
    }

    pub fn pi(p: usize) -> Self {
        Real { v: with_cc(|cc| cc.pi(p, RM)), p }
    }

    pub fn is_nan(&self) -> bool {
        self.v.is_nan() || self.v.is_inf()
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.v.is_positive()
    }

    pub fn abs(&self) -> Self {
        Real { v: self.v.abs(), p: self.p }
    }

    pub fn sqrt(&self) -> Self {
        Real { v: self.v.sqrt(self.p, RM), p: self.p }
    }

    pub fn ln(&self) -> Self {
        let p = self.p;
        Real { v: with_cc(|cc| self.v.ln(p, RM, cc)), p }
    }

    pub fn exp(&self) -> Self {
        let p = self.p;
        Real { v: with_cc(|cc| self.v.exp(p, RM, cc)), p }
    }

    pub fn sin(&self) -> Self {
        let p = self.p;
        Real { v: with_cc(|cc| self.v.sin(p, RM, cc)), p }
    }

    pub fn cos(&self) -> Self {
        let p = self.p;
        Real { v: with_cc(|cc| self.v.cos(p, RM, cc)), p }
    }

    pub fn atan(&self) -> Self {
        let p = self.p;
        Real { v: with_cc(|cc| self.v.atan(p, RM, cc)), p }
    }

    pub fn powi(&self, n: usize) -> Self {
        Real { v: self.v.powi(n, self.p, RM), p: self.p }
    }

    /// self^e for a real exponent; self must be positive.
    pub fn powr(&self, e: &Real) -> Self {
        (&self.ln() * e).exp()
    }

    pub fn recip(&self) -> Self {
        Real { v: self.v.reciprocal(self.p, RM), p: self.p }
    }

    pub fn scale(&self, k: i64) -> Self {
        self * &Real::from_i64(k, self.p)
    }

    /// Exact value of the binary float.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.v.is_zero() {
            return Some(Rational::zero());
        }
        let (words, _, sign, e, _) = self.v.as_raw_parts()?;
        let m = BigInt::from(BigUint::new(words.iter().flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32]).collect()));
        let shift = e as i64 - 64 * words.len() as i64;
        let two = BigInt::from(2);
        let mut q = if shift >= 0 {
            Rational::from_integer(m * num_traits::pow(two, shift as usize))
        } else {
            Rational::new(m, num_traits::pow(two, (-shift) as usize))
        };
        if sign == Sign::Neg {
            q = -q;
        }
        Some(q)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_rational().and_then(|q| q.to_f64()).unwrap_or(f64::NAN)
    }

    /// Fixed-point decimal string with `digits` digits after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        match self.to_rational() {
            Some(q) => rational_to_decimal(&q, digits),
            None => "nan".into(),
        }
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_sci(&self, digits: usize) -> String {
        match self.to_rational() {
            Some(q) => rational_to_sci(&q, digits),
            None => "nan".into(),
        }
    }

    /// Decimal digits the working precision supports.
    pub fn decimal_digits(&self) -> usize {
        (self.p as f64 * std::f64::consts::LOG10_2).floor() as usize
    }

    pub fn min(&self, o: &Real) -> Real {
        if self <= o {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn max(&self, o: &Real) -> Real {
        if self >= o {
            self.clone()
        } else {
            o.clone()
        }
    }
}

pub fn rational_to_decimal(q: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (q.abs() * Rational::from_integer(scale.clone()) + Rational::new(1.into(), 2.into())).floor().to_integer();
    let int_part = &scaled / &scale;
    let frac = &scaled % &scale;
    let sign = if q.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
    }
}

pub fn rational_to_sci(q: &Rational, digits: usize) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let a = q.abs();
    let ten = Rational::from_integer(10.into());
    let mut e: i64 = 0;
    let mut m = a.clone();
    while m >= ten {
        m /= &ten;
        e += 1;
    }
    while m < Rational::one() {
        m *= &ten;
        e -= 1;
    }
    let mut s = rational_to_decimal(&m, digits - 1);
    if s.starts_with("10") {
        e += 1;
        s = rational_to_decimal(&(m / ten), digits - 1);
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}{s}e{e}")
}

impl PartialEq for Real {
    fn eq(&self, o: &Real) -> bool {
        self.partial_cmp(o) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Real) -> Option<Ordering> {
        self.v.cmp(&o.v).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(self.decimal_digits().min(40)))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                let p = self.p.max(o.p);
                Real { v: self.v.$m(&o.v, p, RM), p }
            }
        }
        impl $tr for Real {
            type Output = Real;
            fn $m(self, o: Real) -> Real {
                (&self).$m(&o)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, o: &Real) -> Real {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { v: { let mut v = self.v.clone(); v.inv_sign(); v }, p: self.p }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

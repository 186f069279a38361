//! Rational functions in (w, x) whose denominators are products of monic
//! affine factors (w - rho), powers of x and powers of (x - 1).  Every
//! denominator met by the contiguous calculus has this shape, so keeping it
//! factored makes cancellation an exact evaluation test.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::wxpoly::{Affine, WxPoly};
use crate::error::{Error, Result};
use crate::exact::{Rational, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WxRatFunc {
    num: WxPoly,
    den_w: BTreeMap<Rational, u32>,
    den_x: u32,
    den_xm1: u32,
}

impl WxRatFunc {
    pub fn from_poly(num: WxPoly) -> Self {
        WxRatFunc { num, den_w: BTreeMap::new(), den_x: 0, den_xm1: 0 }
    }

    pub fn zero() -> Self {
        Self::from_poly(WxPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(WxPoly::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(WxPoly::constant(q))
    }

    pub fn x() -> Self {
        Self::from_poly(WxPoly::x())
    }

    pub fn xm1() -> Self {
        Self::from_poly(WxPoly::from_x(UniPoly::linear_root(&Rational::one())))
    }

    pub fn affine(a: &Affine) -> Self {
        Self::from_poly(WxPoly::from_affine(a))
    }

    /// x^k (x-1)^l for signed k, l.
    pub fn x_powers(k: i32, l: i32) -> Self {
        let mut num = UniPoly::one();
        if k > 0 {
            num = &num * &UniPoly::z().pow(k as u32);
        }
        if l > 0 {
            num = &num * &UniPoly::linear_root(&Rational::one()).pow(l as u32);
        }
        WxRatFunc {
            num: WxPoly::from_x(num),
            den_w: BTreeMap::new(),
            den_x: (-k).max(0) as u32,
            den_xm1: (-l).max(0) as u32,
        }
    }

    /// 1 / a; rejects the identically-zero expression.
    pub fn inv_affine(a: &Affine) -> Result<Self> {
        if a.is_identically_zero() {
            return Err(Error::ZeroDenominator("affine parameter vanishes identically".into()));
        }
        match a.root() {
            None => Ok(Self::constant(a.offset.recip())),
            Some(rho) => {
                let mut den_w = BTreeMap::new();
                den_w.insert(rho, 1);
                Ok(WxRatFunc { num: WxPoly::constant(a.slope.recip()), den_w, den_x: 0, den_xm1: 0 })
            }
        }
    }

    /// Product of the affine factors (numerator side).
    pub fn product(factors: &[Affine]) -> Self {
        let mut num = WxPoly::one();
        for f in factors {
            num = &num * &WxPoly::from_affine(f);
        }
        Self::from_poly(num)
    }

    /// Reciprocal of a product of affine factors.
    pub fn inv_product(factors: &[Affine]) -> Result<Self> {
        let mut acc = Self::one();
        for f in factors {
            acc = &acc * &Self::inv_affine(f)?;
        }
        Ok(acc)
    }

    pub fn numerator(&self) -> &WxPoly {
        &self.num
    }

    pub fn den_w(&self) -> &BTreeMap<Rational, u32> {
        &self.den_w
    }

    pub fn den_x(&self) -> u32 {
        self.den_x
    }

    pub fn den_xm1(&self) -> u32 {
        self.den_xm1
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn den_w_degree(&self) -> u32 {
        self.den_w.values().sum()
    }

    /// Polynomial in w when no affine denominator survives.
    pub fn is_w_polynomial(&self) -> bool {
        self.den_w.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = self.clone();
        out.num = out.num.scale(k);
        out.normalize()
    }

    /// Expanded monic denominator in w (without the x factors).
    pub fn den_w_poly(&self) -> UniPoly {
        let mut d = UniPoly::one();
        for (rho, m) in &self.den_w {
            d = &d * &UniPoly::linear_root(rho).pow(*m);
        }
        d
    }

    /// Denominator x^a (x-1)^b as a polynomial in x.
    pub fn den_x_poly(&self) -> UniPoly {
        &UniPoly::z().pow(self.den_x) * &UniPoly::linear_root(&Rational::one()).pow(self.den_xm1)
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let roots: Vec<Rational> = self.den_w.keys().cloned().collect();
        for rho in roots {
            let mut m = self.den_w[&rho];
            while m > 0 {
                let (q, r) = self.num.div_linear(&rho);
                if !r.is_zero() {
                    break;
                }
                self.num = q;
                m -= 1;
            }
            if m == 0 {
                self.den_w.remove(&rho);
            } else {
                self.den_w.insert(rho, m);
            }
        }
        while self.den_x > 0 && self.num.divisible_by_x() {
            self.num = self.num.div_x();
            self.den_x -= 1;
        }
        while self.den_xm1 > 0 && self.num.divisible_by_xm1() {
            self.num = self.num.div_xm1();
            self.den_xm1 -= 1;
        }
        self
    }

    /// Numerator multiplied up to the given common denominator.
    fn lift(&self, den_w: &BTreeMap<Rational, u32>, den_x: u32, den_xm1: u32) -> WxPoly {
        let mut n = self.num.clone();
        for (rho, m) in den_w {
            let have = self.den_w.get(rho).copied().unwrap_or(0);
            for _ in have..*m {
                n = &n * &WxPoly::from_affine(&Affine::new(Rational::one(), -rho));
            }
        }
        let xp = UniPoly::z().pow(den_x - self.den_x);
        let x1 = UniPoly::linear_root(&Rational::one()).pow(den_xm1 - self.den_xm1);
        n.mul_x(&(&xp * &x1))
    }

    /// Substitute w = value; fails on a pole.
    pub fn eval_w(&self, w: &Rational) -> Result<WxRatFunc> {
        if self.den_w.contains_key(w) {
            return Err(Error::ZeroDenominator(format!("pole at w = {w}")));
        }
        let mut d = Rational::one();
        for (rho, m) in &self.den_w {
            d *= crate::exact::rational::pow(&(w - rho), *m);
        }
        Ok(WxRatFunc {
            num: WxPoly::from_x(self.num.eval_w(w).scale(&d.recip())),
            den_w: BTreeMap::new(),
            den_x: self.den_x,
            den_xm1: self.den_xm1,
        }
        .normalize())
    }

    /// Substitute x = value; fails when an x or (x-1) denominator vanishes.
    pub fn eval_x(&self, x: &Rational) -> Result<WxRatFunc> {
        let one = Rational::one();
        if (self.den_x > 0 && x.is_zero()) || (self.den_xm1 > 0 && *x == one) {
            return Err(Error::ZeroDenominator(format!("pole at x = {x}")));
        }
        let d = crate::exact::rational::pow(x, self.den_x) * crate::exact::rational::pow(&(x - &one), self.den_xm1);
        Ok(WxRatFunc { num: self.num.eval_x(x).scale(&d.recip()), den_w: self.den_w.clone(), den_x: 0, den_xm1: 0 }
            .normalize())
    }

    /// Fully rational evaluation.
    pub fn eval(&self, w: &Rational, x: &Rational) -> Result<Rational> {
        let v = self.eval_w(w)?.eval_x(x)?;
        Ok(v.num.coeff(0).coeff(0))
    }

    /// Laurent coefficients at w = infinity: returns (top exponent, coefficients)
    /// where coefficient k multiplies w^(top - k); each coefficient is a
    /// function of x only.
    pub fn expansion_at_infinity(&self, terms: usize) -> Option<(i64, Vec<WxRatFunc>)> {
        let dn = self.num.deg_w()?;
        let d = self.den_w_poly();
        let dd = d.degree().unwrap();
        let nrev: Vec<UniPoly> = (0..terms).map(|k| if k <= dn { self.num.coeff(dn - k) } else { UniPoly::zero() }).collect();
        let drev: Vec<Rational> = (0..terms).map(|k| if k <= dd { d.coeff(dd - k) } else { Rational::zero() }).collect();
        let mut e: Vec<UniPoly> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut v = nrev[k].clone();
            for i in 1..=k {
                v = &v - &e[k - i].scale(&drev[i]);
            }
            e.push(v);
        }
        let scale = |p: UniPoly| {
            WxRatFunc { num: WxPoly::from_x(p), den_w: BTreeMap::new(), den_x: self.den_x, den_xm1: self.den_xm1 }.normalize()
        };
        Some((dn as i64 - dd as i64, e.into_iter().map(scale).collect()))
    }

    /// Split a w-polynomial into (numerator, x power, (x-1) power).
    pub fn as_w_polynomial(&self) -> Option<(WxPoly, u32, u32)> {
        if self.den_w.is_empty() {
            Some((self.num.clone(), self.den_x, self.den_xm1))
        } else {
            None
        }
    }
}

impl Mul for &WxRatFunc {
    type Output = WxRatFunc;
    fn mul(self, o: &WxRatFunc) -> WxRatFunc {
        if self.is_zero() || o.is_zero() {
            return WxRatFunc::zero();
        }
        let mut den_w = self.den_w.clone();
        for (rho, m) in &o.den_w {
            *den_w.entry(rho.clone()).or_insert(0) += m;
        }
        WxRatFunc { num: &self.num * &o.num, den_w, den_x: self.den_x + o.den_x, den_xm1: self.den_xm1 + o.den_xm1 }
            .normalize()
    }
}

impl Add for &WxRatFunc {
    type Output = WxRatFunc;
    fn add(self, o: &WxRatFunc) -> WxRatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut den_w = self.den_w.clone();
        for (rho, m) in &o.den_w {
            let e = den_w.entry(rho.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let dx = self.den_x.max(o.den_x);
        let dx1 = self.den_xm1.max(o.den_xm1);
        let num = &self.lift(&den_w, dx, dx1) + &o.lift(&den_w, dx, dx1);
        WxRatFunc { num, den_w, den_x: dx, den_xm1: dx1 }.normalize()
    }
}

impl Neg for &WxRatFunc {
    type Output = WxRatFunc;
    fn neg(self) -> WxRatFunc {
        let mut out = self.clone();
        out.num = -&out.num;
        out
    }
}

impl Sub for &WxRatFunc {
    type Output = WxRatFunc;
    fn sub(self, o: &WxRatFunc) -> WxRatFunc {
        self + &(-o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn aff(c: i64, d: i64) -> Affine {
        Affine::new(rat(c, 1), rat(d, 1))
    }

    #[test]
    fn cancellation() {
        // (2w + 4) / (w + 2) = 2
        let f = &WxRatFunc::affine(&aff(2, 4)) * &WxRatFunc::inv_affine(&aff(1, 2)).unwrap();
        assert_eq!(f, WxRatFunc::constant(rat(2, 1)));
        // x (x - 1) / (x (x-1)) = 1
        let g = &WxRatFunc::x_powers(1, 1) * &WxRatFunc::x_powers(-1, -1);
        assert_eq!(g, WxRatFunc::one());
    }

    #[test]
    fn sums_over_common_denominator() {
        // 1/w - 1/(w+1) = 1/(w(w+1))
        let a = WxRatFunc::inv_affine(&aff(1, 0)).unwrap();
        let b = WxRatFunc::inv_affine(&aff(1, 1)).unwrap();
        let lhs = &a - &b;
        let rhs = &a * &b;
        assert!((&lhs - &rhs).is_zero());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_zero_parameter() {
        assert!(WxRatFunc::inv_affine(&aff(0, 0)).is_err());
    }

    #[test]
    fn laurent_expansion() {
        // (w^2 + 1)/(w (w + 1)) = 1 - 1/w + 2/w^2 - ...
        let n = WxRatFunc::from_poly(WxPoly::from_w(&UniPoly::from_ints(&[1, 0, 1])));
        let f = &n * &WxRatFunc::inv_product(&[aff(1, 0), aff(1, 1)]).unwrap();
        let (top, e) = f.expansion_at_infinity(3).unwrap();
        assert_eq!(top, 0);
        assert_eq!(e[0], WxRatFunc::one());
        assert_eq!(e[1], WxRatFunc::constant(rat(-1, 1)));
        assert_eq!(e[2], WxRatFunc::constant(rat(2, 1)));
    }

    #[test]
    fn evaluation() {
        let f = &WxRatFunc::affine(&aff(1, 3)) * &WxRatFunc::x_powers(-1, 0);
        assert_eq!(f.eval(&rat(1, 1), &rat(1, 2)).unwrap(), rat(8, 1));
        assert!(f.eval_x(&rat(0, 1)).is_err());
    }
}

//! Polynomials in w whose coefficients are polynomials in x.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{Rational, UniPoly};

/// c * w + d with rational c, d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: Rational,
    pub offset: Rational,
}

impl Affine {
    pub fn new(slope: Rational, offset: Rational) -> Self {
        Affine { slope, offset }
    }

    pub fn constant(d: Rational) -> Self {
        Affine { slope: Rational::zero(), offset: d }
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }

    pub fn is_identically_zero(&self) -> bool {
        self.slope.is_zero() && self.offset.is_zero()
    }

    pub fn plus(&self, k: &Rational) -> Affine {
        Affine { slope: self.slope.clone(), offset: &self.offset + k }
    }

    pub fn sub(&self, o: &Affine) -> Affine {
        Affine { slope: &self.slope - &o.slope, offset: &self.offset - &o.offset }
    }

    pub fn add(&self, o: &Affine) -> Affine {
        Affine { slope: &self.slope + &o.slope, offset: &self.offset + &o.offset }
    }

    pub fn neg(&self) -> Affine {
        Affine { slope: -&self.slope, offset: -&self.offset }
    }

    pub fn eval(&self, w: &Rational) -> Rational {
        &self.slope * w + &self.offset
    }

    /// The w at which the expression vanishes (non-constant case).
    pub fn root(&self) -> Option<Rational> {
        if self.slope.is_zero() {
            None
        } else {
            Some(-&self.offset / &self.slope)
        }
    }

    /// Factors of the Pochhammer product (self)_k.
    pub fn pochhammer_factors(&self, k: usize) -> Vec<Affine> {
        (0..k).map(|i| self.plus(&Rational::from_integer((i as i64).into()))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WxPoly {
    /// c[k] is the coefficient of w^k.
    c: Vec<UniPoly>,
}

impl WxPoly {
    pub fn new(mut c: Vec<UniPoly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        WxPoly { c }
    }

    pub fn zero() -> Self {
        WxPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_x(UniPoly::one())
    }

    pub fn from_x(p: UniPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_x(UniPoly::constant(q))
    }

    pub fn x() -> Self {
        Self::from_x(UniPoly::z())
    }

    pub fn from_affine(a: &Affine) -> Self {
        Self::new(vec![UniPoly::constant(a.offset.clone()), UniPoly::constant(a.slope.clone())])
    }

    /// A polynomial in w with rational coefficients.
    pub fn from_w(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> UniPoly {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_w(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.c.iter().filter_map(|p| p.degree()).max()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.c.iter().map(|p| p.scale(k)).collect())
    }

    pub fn mul_x(&self, p: &UniPoly) -> Self {
        Self::new(self.c.iter().map(|q| q * p).collect())
    }

    /// Substitute a rational w; result is a polynomial in x.
    pub fn eval_w(&self, w: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        let ww = UniPoly::constant(w.clone());
        for p in self.c.iter().rev() {
            acc = &(&acc * &ww) + p;
        }
        acc
    }

    /// Substitute a rational x; result has constant x-coefficients.
    pub fn eval_x(&self, x: &Rational) -> Self {
        Self::new(self.c.iter().map(|p| UniPoly::constant(p.eval(x))).collect())
    }

    /// Coefficients in w after substituting x (as a rational polynomial in w).
    pub fn at_x(&self, x: &Rational) -> UniPoly {
        UniPoly::new(self.c.iter().map(|p| p.eval(x)).collect())
    }

    /// Division by (w - root); returns (quotient, remainder in x).
    pub fn div_linear(&self, root: &Rational) -> (WxPoly, UniPoly) {
        if self.c.is_empty() {
            return (Self::zero(), UniPoly::zero());
        }
        let n = self.c.len() - 1;
        let mut q = vec![UniPoly::zero(); n];
        let rr = UniPoly::constant(root.clone());
        let mut carry = self.c[n].clone();
        for k in (0..n).rev() {
            q[k] = carry.clone();
            carry = &self.c[k] + &(&carry * &rr);
        }
        (Self::new(q), carry)
    }

    pub fn derivative_w(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, p)| p.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    /// True when every coefficient is divisible by x.
    pub fn divisible_by_x(&self) -> bool {
        !self.is_zero() && self.c.iter().all(|p| p.coeff(0).is_zero())
    }

    pub fn div_x(&self) -> Self {
        Self::new(self.c.iter().map(|p| UniPoly::new(p.coeffs().iter().skip(1).cloned().collect())).collect())
    }

    pub fn divisible_by_xm1(&self) -> bool {
        !self.is_zero() && self.c.iter().all(|p| p.eval(&Rational::one()).is_zero())
    }

    pub fn div_xm1(&self) -> Self {
        let d = UniPoly::linear_root(&Rational::one());
        Self::new(self.c.iter().map(|p| p.div_rem(&d).0).collect())
    }

    /// Leading coefficient in w.
    pub fn lc_w(&self) -> UniPoly {
        self.c.last().cloned().unwrap_or_default()
    }
}

impl Add for &WxPoly {
    type Output = WxPoly;
    fn add(self, o: &WxPoly) -> WxPoly {
        let n = self.c.len().max(o.c.len());
        WxPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &WxPoly {
    type Output = WxPoly;
    fn sub(self, o: &WxPoly) -> WxPoly {
        let n = self.c.len().max(o.c.len());
        WxPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Mul for &WxPoly {
    type Output = WxPoly;
    fn mul(self, o: &WxPoly) -> WxPoly {
        if self.is_zero() || o.is_zero() {
            return WxPoly::zero();
        }
        let mut v = vec![UniPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        WxPoly::new(v)
    }
}

impl Neg for &WxPoly {
    type Output = WxPoly;
    fn neg(self) -> WxPoly {
        WxPoly::new(self.c.iter().map(|p| -p).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn synthetic_division() {
        // (w - 2)(w + x) = w^2 + (x - 2) w - 2x
        let f = WxPoly::new(vec![UniPoly::from_ints(&[0, -2]), UniPoly::from_ints(&[-2, 1]), UniPoly::one()]);
        let (q, r) = f.div_linear(&rat(2, 1));
        assert!(r.is_zero());
        assert_eq!(q, WxPoly::new(vec![UniPoly::z(), UniPoly::one()]));
        let (_, r) = f.div_linear(&rat(1, 1));
        assert_eq!(r, UniPoly::from_ints(&[-1, -1]));
    }
}

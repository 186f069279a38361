//! The data sextuple lambda = (p, q, r; a, b; x).

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::rational::fmt_rational;
use crate::exact::{rat, AlgebraicReal, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperData {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub a: Rational,
    pub b: Rational,
    pub x: AlgebraicReal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// 0 < p < r, q = 0, 0 < x < 1
    I,
    /// p < 0, q = 0, r > 0, 0 < x < 1
    J,
}

pub fn half() -> Rational {
    rat(1, 2)
}

impl HyperData {
    pub fn new(p: i64, q: i64, r: i64, a: Rational, b: Rational, x: AlgebraicReal) -> Self {
        HyperData { p, q, r, a, b, x }
    }

    /// (p, 0, r; a, 1/2; x)
    pub fn boundary(p: i64, r: i64, a: Rational, x: AlgebraicReal) -> Self {
        Self::new(p, 0, r, a, half(), x)
    }

    fn x_in_unit(&self) -> bool {
        self.x.cmp_rational(&Rational::zero()) == Ordering::Greater && self.x.cmp_rational(&Rational::one()) == Ordering::Less
    }

    pub fn region(&self) -> Option<Region> {
        if self.q != 0 || !self.x_in_unit() {
            return None;
        }
        if 0 < self.p && self.p < self.r {
            Some(Region::I)
        } else if self.p < 0 && self.r > 0 {
            Some(Region::J)
        } else {
            None
        }
    }

    /// q = 0 and b = 1/2, the shape handled by the contiguous engine.
    pub fn is_boundary_shape(&self) -> bool {
        self.q == 0 && self.b == half()
    }
}

impl fmt::Display for HyperData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = match self.x.as_rational() {
            Some(q) => fmt_rational(&q),
            None => format!("root of {} in [{}, {}]", self.x.defining(), fmt_rational(&self.x.interval().lo), fmt_rational(&self.x.interval().hi)),
        };
        write!(f, "({}, {}, {}; {}, {}; {})", self.p, self.q, self.r, fmt_rational(&self.a), fmt_rational(&self.b), x)
    }
}

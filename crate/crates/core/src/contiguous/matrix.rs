//! Contiguous matrices A1, A3, A13 and their path products.

use std::ops::Mul;

use num_traits::One;

use super::ratfunc::WxRatFunc;
use super::wxpoly::Affine;
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [[WxRatFunc; 2]; 2],
}

impl Mat2 {
    pub fn new(a: WxRatFunc, b: WxRatFunc, c: WxRatFunc, d: WxRatFunc) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(WxRatFunc::one(), WxRatFunc::zero(), WxRatFunc::zero(), WxRatFunc::one())
    }

    pub fn det(&self) -> WxRatFunc {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn scale(&self, f: &WxRatFunc) -> Mat2 {
        Mat2::new(f * &self.e[0][0], f * &self.e[0][1], f * &self.e[1][0], f * &self.e[1][1])
    }

    pub fn map(&self, mut g: impl FnMut(&WxRatFunc) -> Result<WxRatFunc>) -> Result<Mat2> {
        Ok(Mat2::new(g(&self.e[0][0])?, g(&self.e[0][1])?, g(&self.e[1][0])?, g(&self.e[1][1])?))
    }

    /// Substitute a value for the argument z (the x variable).
    pub fn at_z(&self, z: &Rational) -> Result<Mat2> {
        self.map(|f| f.eval_x(z))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        let m = |i: usize, j: usize| &(&self.e[i][0] * &o.e[0][j]) + &(&self.e[i][1] * &o.e[1][j]);
        Mat2::new(m(0, 0), m(0, 1), m(1, 0), m(1, 1))
    }
}

/// Parameter triple (alpha, beta, gamma), each affine in w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: Affine,
    pub beta: Affine,
    pub gamma: Affine,
}

impl Params {
    pub fn new(alpha: Affine, beta: Affine, gamma: Affine) -> Self {
        Params { alpha, beta, gamma }
    }

    pub fn constant(a: Rational, b: Rational, c: Rational) -> Self {
        Self::new(Affine::constant(a), Affine::constant(b), Affine::constant(c))
    }

    pub fn shifted(&self, d: [i64; 3]) -> Params {
        let k = |n: i64| Rational::from_integer(n.into());
        Params::new(self.alpha.plus(&k(d[0])), self.beta.plus(&k(d[1])), self.gamma.plus(&k(d[2])))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    A1,
    A3,
    A13,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftVector {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

fn af(a: &Affine) -> WxRatFunc {
    WxRatFunc::affine(a)
}

fn inv(a: &Affine) -> Result<WxRatFunc> {
    WxRatFunc::inv_affine(a)
}

/// The basic matrix with symbolic z.
pub fn basic_matrix(kind: BasicKind, prm: &Params) -> Result<Mat2> {
    let (al, be, ga) = (&prm.alpha, &prm.beta, &prm.gamma);
    let one = Rational::one();
    let z = WxRatFunc::x();
    let zm1 = WxRatFunc::xm1();
    let inv_z = WxRatFunc::x_powers(-1, 0);
    let inv_zm1 = WxRatFunc::x_powers(0, -1);
    match kind {
        BasicKind::A1 => {
            let ia1 = inv(&al.plus(&one))?;
            let b = &(&af(be) * &z) * &inv(ga)?;
            let c = -&(&(&af(ga) * &ia1) * &inv_zm1);
            let d_num = &af(&ga.sub(al).plus(&-&one)) - &(&af(be) * &z);
            let d = &(&d_num * &ia1) * &inv_zm1;
            Ok(Mat2::new(WxRatFunc::one(), b, c, d))
        }
        BasicKind::A3 => {
            let den = &inv(&ga.sub(al))? * &inv(&ga.sub(be))?;
            let gg1 = &af(ga) * &af(&ga.plus(&one));
            let a = &(&af(ga) * &af(&ga.sub(al).sub(be))) * &den;
            let b = -&(&(&(&af(al) * &af(be)) * &zm1) * &den);
            let c = &(&gg1 * &den) * &inv_z;
            let d = &(&(&gg1 * &zm1) * &den) * &inv_z;
            Ok(Mat2::new(a, b, c, d))
        }
        BasicKind::A13 => {
            let pre = inv(&ga.sub(be))?;
            let ia1 = inv(&al.plus(&one))?;
            let a = af(ga);
            let b = &af(be) * &zm1;
            let c = -&(&(&(&af(ga) * &af(&ga.plus(&one))) * &ia1) * &inv_z);
            let d_num = &af(ga) - &(&af(be) * &z);
            let d = &(&(&af(&ga.plus(&one)) * &d_num) * &ia1) * &inv_z;
            Ok(Mat2::new(a, b, c, d).scale(&pre))
        }
    }
}

/// Determinant of a basic matrix by its closed formula.
pub fn basic_det(kind: BasicKind, prm: &Params) -> Result<WxRatFunc> {
    let (al, be, ga) = (&prm.alpha, &prm.beta, &prm.gamma);
    let one = Rational::one();
    Ok(match kind {
        BasicKind::A1 => &(&af(&ga.sub(al).plus(&-&one)) * &inv(&al.plus(&one))?) * &WxRatFunc::x_powers(0, -1),
        BasicKind::A3 => {
            let n = &(&af(ga) * &af(&ga.plus(&one))) * &WxRatFunc::x_powers(-1, 1);
            &(&n * &inv(&ga.sub(al))?) * &inv(&ga.sub(be))?
        }
        BasicKind::A13 => {
            let n = &(&af(ga) * &af(&ga.plus(&one))) * &WxRatFunc::x_powers(-1, 0);
            &(&n * &inv(&al.plus(&one))?) * &inv(&ga.sub(be))?
        }
    })
}

/// Left-extending product along `path` (entries 1 or 3).
pub fn contig_product(prm: &Params, sv: ShiftVector, path: &[u8]) -> Result<Mat2> {
    let n1 = path.iter().filter(|&&i| i == 1).count() as i64;
    let n3 = path.iter().filter(|&&i| i == 3).count() as i64;
    if sv.q != 0 || n1 != sv.p || n3 != sv.r || (n1 + n3) as usize != path.len() {
        return Err(Error::PathMismatch(format!("path {path:?} for ({}, {}, {})", sv.p, sv.q, sv.r)));
    }
    let mut m = Mat2::identity();
    let mut cur = prm.clone();
    for &i in path {
        let (kind, step) = if i == 1 { (BasicKind::A1, [1, 0, 0]) } else { (BasicKind::A3, [0, 0, 1]) };
        m = &basic_matrix(kind, &cur)? * &m;
        cur = cur.shifted(step);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn cparams(a: Rational, b: Rational, c: Rational) -> Params {
        Params::constant(a, b, c)
    }

    #[test]
    fn determinant_examples() {
        let prm = cparams(rat(1, 1), rat(1, 1), rat(2, 1));
        let d1 = basic_matrix(BasicKind::A1, &prm).unwrap().at_z(&rat(1, 2)).unwrap().det();
        assert!(d1.is_zero());
        let d3 = basic_matrix(BasicKind::A3, &prm).unwrap().at_z(&rat(1, 2)).unwrap().det();
        assert_eq!(d3, WxRatFunc::constant(rat(-6, 1)));
    }

    #[test]
    fn closed_form_determinants() {
        let prm = Params::new(
            Affine::new(rat(2, 1), rat(1, 3)),
            Affine::constant(rat(1, 2)),
            Affine::new(rat(5, 1), rat(0, 1)),
        );
        for k in [BasicKind::A1, BasicKind::A3, BasicKind::A13] {
            let m = basic_matrix(k, &prm).unwrap();
            assert_eq!(m.det(), basic_det(k, &prm).unwrap(), "{k:?}");
        }
    }

    #[test]
    fn a13_is_a1_after_a3() {
        let prm = cparams(rat(2, 7), rat(-3, 5), rat(11, 4));
        let lhs = basic_matrix(BasicKind::A13, &prm).unwrap();
        let rhs = &basic_matrix(BasicKind::A1, &prm.shifted([0, 0, 1])).unwrap() * &basic_matrix(BasicKind::A3, &prm).unwrap();
        assert_eq!(lhs, rhs);
        let sv = ShiftVector { p: 1, q: 0, r: 1 };
        assert_eq!(contig_product(&prm, sv, &[3, 1]).unwrap(), lhs);
        assert_eq!(contig_product(&prm, sv, &[1, 3]).unwrap(), lhs);
    }

    #[test]
    fn paths_agree() {
        let prm = Params::new(Affine::new(rat(1, 1), rat(1, 5)), Affine::constant(rat(1, 2)), Affine::new(rat(2, 1), rat(0, 1)));
        let sv = ShiftVector { p: 1, q: 0, r: 2 };
        let a = contig_product(&prm, sv, &[1, 3, 3]).unwrap();
        assert_eq!(a, contig_product(&prm, sv, &[3, 1, 3]).unwrap());
        assert_eq!(a, contig_product(&prm, sv, &[3, 3, 1]).unwrap());
        assert!(contig_product(&prm, sv, &[1, 3]).is_err());
    }

    #[test]
    fn degenerate_parameters_rejected() {
        // gamma identically zero
        let prm = cparams(rat(1, 1), rat(1, 2), rat(0, 1));
        assert!(basic_matrix(BasicKind::A1, &prm).is_err());
        // alpha + 1 = 0
        let prm = cparams(rat(-1, 1), rat(1, 2), rat(3, 1));
        assert!(basic_matrix(BasicKind::A13, &prm).is_err());
    }
}

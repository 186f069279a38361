//! Phi and P at the special points xi_j, eta_j, zeta_i, where both series
//! terminate and the products factor into F_k polynomials.

use num_traits::One;

use super::terminating::{f_k, pochhammer};
use super::truncated::{p_poly, phi};
use crate::contiguous::WxPoly;
use crate::data::{half, HyperData};
use crate::error::{Error, Result};
use crate::exact::rational::{int, is_integer};
use crate::exact::{Rational, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    Xi,
    Eta,
    Zeta,
}

/// Values at a special point as polynomials in x, by direct substitution
/// into Phi, P and by the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValues {
    pub point: Rational,
    pub phi_direct: UniPoly,
    pub p_direct: UniPoly,
    pub phi_closed: UniPoly,
    pub p_closed: UniPoly,
}

impl SpecialValues {
    pub fn agree(&self) -> bool {
        self.phi_direct == self.phi_closed && self.p_direct == self.p_closed
    }
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn at_w(f: &WxPoly, w: &Rational) -> UniPoly {
    f.eval_w(w)
}

fn kernel(k: i64, b: &Rational, g: &Rational) -> UniPoly {
    f_k(k as usize, b, g)
}

pub fn special_point(lam: &HyperData, kind: SpecialKind, index: i64) -> Result<Rational> {
    let (p, r) = (lam.p, lam.r);
    let (bound, pt) = match kind {
        SpecialKind::Xi => (r - p, -(int(index) - &lam.a) / int(r - p)),
        SpecialKind::Eta => (r, -(int(index) - half()) / int(r)),
        SpecialKind::Zeta => (p, -(&lam.a + int(index)) / int(p)),
    };
    if index < 0 || index >= bound {
        return Err(Error::Domain(format!("index {index} out of range [0, {bound})")));
    }
    Ok(pt)
}

pub fn eval_special(lam: &HyperData, kind: SpecialKind, index: i64) -> Result<SpecialValues> {
    let (p, r) = (lam.p, lam.r);
    let w = special_point(lam, kind, index)?;
    let rw = int(r) * &w;
    if kind != SpecialKind::Eta && is_integer(&rw) {
        return Err(Error::Inapplicable(format!("r * w = {rw} is an integer at {kind:?}_{index}")));
    }
    let j = index;
    let one_minus_x = UniPoly::from_ints(&[1, -1]);
    let (phi_closed, p_closed) = match kind {
        SpecialKind::Xi => {
            let b = int(2) - int(r) * (&w + Rational::one());
            let common = kernel(j, &(&rw - half()), &rw);
            let s = sign(r - p - 1 - j);
            let k2 = r - p - 1 - j;
            let ph = (&common * &kernel(k2, &(&b - half()), &b)).scale(&(&s * pochhammer(&(&rw + int(j)), p as usize)));
            let pp = (&common * &kernel(k2, &(&b - half()), &(&b - Rational::one()))).scale(&(&s * pochhammer(&(&rw + int(j)), (p + 1) as usize)));
            (ph, pp)
        }
        SpecialKind::Eta => {
            let c = int(r - p) * &w - &lam.a;
            let d = Rational::one() - int(r - p) * (&w + Rational::one()) + &lam.a;
            let s = sign(r - 1 - j);
            let common = kernel(j, &c, &(half() - int(j)));
            let ph = (&common * &kernel(r - 1 - j, &d, &(int(3) / int(2) + int(j - r)))).scale(&s);
            let pp = (&common * &kernel(r - 1 - j, &d, &(half() + int(j - r)))).scale(&(s / int(2)));
            (ph, pp)
        }
        SpecialKind::Zeta => {
            let i = index;
            let common = kernel(i, &half(), &rw);
            let poch = pochhammer(&(&rw + int(i)), (r - p) as usize);
            let g1 = int(2) - int(r) * (&w + Rational::one());
            let g2 = Rational::one() - int(r) * (&w + Rational::one());
            let ph = &(&common * &kernel(p - 1 - i, &half(), &g1)) * &one_minus_x.pow((r - p) as u32);
            let pre_p = if r - p >= 1 {
                one_minus_x.pow((r - p - 1) as u32)
            } else {
                return Err(Error::Inapplicable("zeta closed form for P needs r > p".into()));
            };
            let pp = &(&common * &kernel(p - i, &(-half()), &g2)) * &pre_p;
            (ph.scale(&(sign(p - 1 - i) * &poch)), pp.scale(&(sign(p - i) * poch)))
        }
    };
    Ok(SpecialValues {
        phi_direct: at_w(&phi(lam)?, &w),
        p_direct: at_w(&p_poly(lam)?, &w),
        point: w,
        phi_closed,
        p_closed,
    })
}

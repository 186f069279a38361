//! Phi(w; lambda) and P(w; lambda): truncated products of two Gauss series,
//! computed directly and through Euler's transformation.

use num_traits::One;

use crate::contiguous::{Affine, Params, WxPoly, WxRatFunc};
use crate::data::{half, HyperData};
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{Rational, UniPoly};

fn check(lam: &HyperData) -> Result<()> {
    if !lam.is_boundary_shape() || lam.r < 1 {
        return Err(Error::Domain(format!("truncated products need q = 0, b = 1/2, r >= 1: {lam}")));
    }
    Ok(())
}

/// Coefficients c_0..c_n of 2F1(alpha, beta; gamma; z) as functions of w.
fn series(prm: &Params, n: usize) -> Result<Vec<WxRatFunc>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = WxRatFunc::one();
    for k in 0..=n {
        out.push(c.clone());
        let kk = int(k as i64);
        let num = &WxRatFunc::affine(&prm.alpha.plus(&kk)) * &WxRatFunc::affine(&prm.beta.plus(&kk));
        let den = WxRatFunc::inv_affine(&prm.gamma.plus(&kk))?;
        c = (&(&c * &num) * &den).scale(&(Rational::one() / (kk + Rational::one())));
    }
    Ok(out)
}

/// (1 - z)^m as a polynomial.
fn one_minus_pow(m: u32) -> UniPoly {
    UniPoly::from_ints(&[1, -1]).pow(m)
}

/// clear * < (1 - z)^m * F(first) * F(second) >_{deg}, checked to be a
/// polynomial in w of degree at most `bound`.
fn truncated_product(first: &Params, second: &Params, m: u32, deg: usize, clear: &[Affine], bound: usize) -> Result<WxPoly> {
    let s1 = series(first, deg)?;
    let s2 = series(second, deg)?;
    let pre = one_minus_pow(m);
    let mut acc = WxRatFunc::zero();
    for n in 0..=deg {
        for k in 0..=deg - n {
            let mut inner = WxRatFunc::zero();
            let mut any = false;
            for l in 0..=deg - n - k {
                let c = pre.coeff(l);
                if c == Rational::from_integer(0.into()) {
                    continue;
                }
                any = true;
                inner = &inner + &WxRatFunc::x_powers((n + k + l) as i32, 0).scale(&c);
            }
            if any {
                acc = &acc + &(&(&s1[n] * &s2[k]) * &inner);
            }
        }
    }
    let out = &acc * &WxRatFunc::product(clear);
    match out.as_w_polynomial() {
        Some((p, 0, 0)) if p.deg_w().map_or(true, |d| d <= bound) => Ok(p),
        _ => Err(Error::Invariant(format!("truncated product is not a polynomial of degree <= {bound}"))),
    }
}

fn aff(slope: i64, offset: Rational) -> Affine {
    Affine::new(int(slope), offset)
}

/// alpha*(w) = ((r-p)w - a, rw - 1/2; rw), shifted by `shift` in w.
fn alpha_star(lam: &HyperData, shift: i64) -> Params {
    let (p, r) = (lam.p, lam.r);
    Params::new(
        aff(r - p, int((r - p) * shift) - &lam.a),
        aff(r, int(r * shift) - half()),
        aff(r, int(r * shift)),
    )
}

/// alpha(w) = (pw + a, 1/2; rw), shifted by `shift` in w.
fn alpha(lam: &HyperData, shift: i64) -> Params {
    let (p, r) = (lam.p, lam.r);
    Params::new(aff(p, int(p * shift) + &lam.a), Affine::constant(half()), aff(r, int(r * shift)))
}

/// u - prm, componentwise.
fn reflect(u: [i64; 3], prm: &Params) -> Params {
    Params::new(
        Affine::constant(int(u[0])).sub(&prm.alpha),
        Affine::constant(int(u[1])).sub(&prm.beta),
        Affine::constant(int(u[2])).sub(&prm.gamma),
    )
}

fn rw_factors(lam: &HyperData, k: i64) -> Vec<Affine> {
    aff(lam.r, Rational::from_integer(0.into())).pochhammer_factors(k as usize)
}

pub fn phi(lam: &HyperData) -> Result<WxPoly> {
    check(lam)?;
    let r = lam.r;
    let second = reflect([1, 1, 2], &alpha_star(lam, 1));
    truncated_product(&alpha_star(lam, 0), &second, 0, (r - 1) as usize, &rw_factors(lam, r - 1), (r - 1) as usize)
}

pub fn p_poly(lam: &HyperData) -> Result<WxPoly> {
    check(lam)?;
    let r = lam.r;
    let second = reflect([1, 1, 1], &alpha_star(lam, 1));
    truncated_product(&alpha_star(lam, 0), &second, 0, (r - 1) as usize, &rw_factors(lam, r), r as usize)
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// phi12 = (-1)^(r-p) z^(1-r) (z - 1) Phi / 2.
pub fn phi12_bridge(lam: &HyperData) -> Result<WxRatFunc> {
    let r = lam.r as i32;
    let f = &WxRatFunc::x_powers(1 - r, 1) * &WxRatFunc::from_poly(phi(lam)?);
    Ok(f.scale(&(sign(lam.r - lam.p) * half())))
}

/// phi22 = (-1)^(r-p-1) z^(-r) (z - 1) P.
pub fn phi22_bridge(lam: &HyperData) -> Result<WxRatFunc> {
    let r = lam.r as i32;
    let f = &WxRatFunc::x_powers(-r, 1) * &WxRatFunc::from_poly(p_poly(lam)?);
    Ok(f.scale(&sign(lam.r - lam.p - 1)))
}

fn euler_exponent(lam: &HyperData, k: i64) -> Result<u32> {
    u32::try_from(lam.r - lam.p - k).map_err(|_| Error::Domain(format!("Euler route needs r - p >= {k}: {lam}")))
}

pub fn phi_euler(lam: &HyperData) -> Result<WxPoly> {
    check(lam)?;
    let r = lam.r;
    let m = euler_exponent(lam, 0)?;
    let second = reflect([1, 1, 2], &alpha(lam, 1));
    truncated_product(&alpha(lam, 0), &second, m, (r - 1) as usize, &rw_factors(lam, r - 1), (r - 1) as usize)
}

pub fn p_euler(lam: &HyperData) -> Result<WxPoly> {
    check(lam)?;
    let r = lam.r;
    let m = euler_exponent(lam, 1)?;
    let second = reflect([0, 0, 1], &alpha(lam, 1));
    truncated_product(&alpha(lam, 0), &second, m, (r - 1) as usize, &rw_factors(lam, r), r as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous::lambda::{extract_phi, vanishes_at, A_of_lambda};
    use crate::exact::{rat, AlgebraicReal};

    fn lam(p: i64, r: i64, a: Rational) -> HyperData {
        HyperData::boundary(p, r, a, AlgebraicReal::from_rational(rat(3, 4)))
    }

    #[test]
    fn phi_vanishes_for_solution() {
        let l = lam(1, 3, rat(0, 1));
        let f = phi(&l).unwrap();
        assert!(!f.is_zero());
        assert!(vanishes_at(&WxRatFunc::from_poly(f), &l.x));
        let l2 = HyperData::boundary(1, 2, rat(0, 1), AlgebraicReal::from_rational(rat(1, 2)));
        assert!(!vanishes_at(&WxRatFunc::from_poly(phi(&l2).unwrap()), &l2.x));
    }

    #[test]
    fn p_roots_for_solution() {
        // at x = 3/4, P(w) is a multiple of w (w + 1/2)^2
        let l = lam(1, 3, rat(0, 1));
        let pw = p_poly(&l).unwrap();
        let at: Vec<Rational> = pw.coeffs().iter().map(|c| c.eval(&rat(3, 4))).collect();
        let u = UniPoly::new(at);
        assert_eq!(u.degree(), Some(3));
        let want = &(&UniPoly::z() * &UniPoly::linear_root(&rat(-1, 2))) * &UniPoly::linear_root(&rat(-1, 2));
        assert_eq!(u.monic(), want);
    }

    #[test]
    fn bridge_identities() {
        for (p, r, a) in [(1, 3, rat(0, 1)), (1, 3, rat(2, 5)), (2, 4, rat(-1, 3)), (1, 2, rat(1, 7)), (3, 5, rat(4, 3))] {
            let l = lam(p, r, a);
            let ph = extract_phi(&A_of_lambda(&l).unwrap(), &l).unwrap();
            assert_eq!(ph.phi12, phi12_bridge(&l).unwrap(), "phi12 p={p} r={r}");
            assert_eq!(ph.phi22, phi22_bridge(&l).unwrap(), "phi22 p={p} r={r}");
        }
    }

    #[test]
    fn euler_routes_agree() {
        for (p, r, a) in [(1, 3, rat(1, 3)), (2, 4, rat(0, 1)), (1, 2, rat(3, 7)), (2, 5, rat(-2, 9)), (1, 4, rat(1, 2))] {
            let l = lam(p, r, a);
            assert_eq!(phi_euler(&l).unwrap(), phi(&l).unwrap(), "Phi p={p} r={r}");
            assert_eq!(p_euler(&l).unwrap(), p_poly(&l).unwrap(), "P p={p} r={r}");
        }
    }
}

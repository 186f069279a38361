//! The contiguous matrix A(w; lambda) for lambda = (p, 0, r; a, 1/2; x),
//! with x kept as a free symbol.

use num_traits::{One, Zero};

use super::matrix::{contig_product, Mat2, Params, ShiftVector};
use super::ratfunc::WxRatFunc;
use super::wxpoly::{Affine, WxPoly};
use crate::data::HyperData;
use crate::error::{Error, Result};
use crate::exact::rational::{int, pow};
use crate::exact::{alg_is_root, AlgebraicReal, Rational, UniPoly};

/// The four polynomials of the prefactor decomposition of A(w; lambda).
/// Each is polynomial in w; only powers of x may remain in denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPolys {
    pub phi11: WxRatFunc,
    pub phi12: WxRatFunc,
    pub phi21: WxRatFunc,
    pub phi22: WxRatFunc,
}

fn check_shape(lam: &HyperData) -> Result<()> {
    if !lam.is_boundary_shape() {
        return Err(Error::Domain(format!("expected q = 0 and b = 1/2, got {lam}")));
    }
    if !(1 <= lam.p && lam.p <= lam.r) {
        return Err(Error::Domain(format!("need 1 <= p <= r, got p = {}, r = {}", lam.p, lam.r)));
    }
    Ok(())
}

/// (alpha, beta, gamma) = (pw + a, 1/2, rw).
pub fn lambda_params(lam: &HyperData) -> Params {
    Params::new(
        Affine::new(int(lam.p), lam.a.clone()),
        Affine::constant(lam.b.clone()),
        Affine::new(int(lam.r), Rational::zero()),
    )
}

/// p blocks e1 + e3 (each as e3 then e1) followed by r - p steps e3.
pub fn canonical_path(p: i64, r: i64) -> Vec<u8> {
    let mut path = Vec::with_capacity((p + r) as usize);
    for _ in 0..p {
        path.extend([3, 1]);
    }
    path.extend(std::iter::repeat(3).take((r - p) as usize));
    path
}

#[allow(non_snake_case)]
pub fn A_of_lambda(lam: &HyperData) -> Result<Mat2> {
    check_shape(lam)?;
    let sv = ShiftVector { p: lam.p, q: 0, r: lam.r };
    contig_product(&lambda_params(lam), sv, &canonical_path(lam.p, lam.r))
}

fn aff(slope: i64, offset: Rational) -> Affine {
    Affine::new(int(slope), offset)
}

/// ((r-p)w - a)_{r-p} (rw - 1/2)_r as a factor list.
fn common_den(lam: &HyperData) -> Vec<Affine> {
    let (p, r) = (lam.p, lam.r);
    let mut f = aff(r - p, -&lam.a).pochhammer_factors((r - p) as usize);
    f.extend(aff(r, Rational::new((-1).into(), 2.into())).pochhammer_factors(r as usize));
    f
}

fn alpha1(lam: &HyperData) -> Affine {
    aff(lam.p, &lam.a + Rational::one())
}

fn gamma(lam: &HyperData, k: i64) -> Affine {
    aff(lam.r, int(k))
}

fn to_poly(f: WxRatFunc, bound: usize, name: &str) -> Result<WxRatFunc> {
    if !f.den_w().is_empty() || f.den_xm1() != 0 {
        return Err(Error::Invariant(format!("{name} is not a polynomial in w: {f:?}")));
    }
    if let Some(d) = f.numerator().deg_w() {
        if d > bound {
            return Err(Error::Invariant(format!("{name} has degree {d} > {bound}")));
        }
    }
    Ok(f)
}

pub fn extract_phi(a: &Mat2, lam: &HyperData) -> Result<PhiPolys> {
    check_shape(lam)?;
    let (p, r) = (lam.p as usize, lam.r as usize);
    let d = WxRatFunc::product(&common_den(lam));
    let a1 = alpha1(lam);
    let dp1 = &d * &WxRatFunc::product(&a1.pochhammer_factors(p - 1));
    let dp = &d * &WxRatFunc::product(&a1.pochhammer_factors(p));
    let g0 = gamma(lam, 0);
    let g1 = gamma(lam, 1);
    let phi = |e: &WxRatFunc, pre: &WxRatFunc, g: &Affine, k: usize, bound: usize, name: &str| -> Result<WxRatFunc> {
        let v = &(e * pre) * &WxRatFunc::inv_product(&g.pochhammer_factors(k))?;
        to_poly(v, bound, name)
    };
    Ok(PhiPolys {
        phi11: phi(&a.e[0][0], &dp1, &g0, r, r - 1, "phi11")?,
        phi12: phi(&a.e[0][1], &dp1, &g1, r - 1, r - 1, "phi12")?,
        phi21: phi(&a.e[1][0], &dp, &g0, r + 1, r - 1, "phi21")?,
        phi22: phi(&a.e[1][1], &dp, &g1, r, r, "phi22")?,
    })
}

#[allow(non_snake_case)]
pub fn extract_RQ(a: &Mat2) -> (WxRatFunc, WxRatFunc) {
    (a.e[0][0].clone(), a.e[0][1].clone())
}

/// The closed form of det A(w; lambda).
pub fn det_formula(lam: &HyperData) -> Result<WxRatFunc> {
    check_shape(lam)?;
    let (p, r) = (lam.p as usize, lam.r as usize);
    let mut num = gamma(lam, 0).pochhammer_factors(r);
    num.extend(gamma(lam, 1).pochhammer_factors(r));
    let mut den = alpha1(lam).pochhammer_factors(p);
    den.extend(common_den(lam));
    let xs = WxRatFunc::x_powers(-(r as i32), (r - p) as i32);
    Ok(&(&xs * &WxRatFunc::product(&num)) * &WxRatFunc::inv_product(&den)?)
}

/// C1 times the three root products; equals phi11 * phi22 for a solution.
pub fn phi_product_formula(lam: &HyperData) -> Result<WxRatFunc> {
    check_shape(lam)?;
    let (p, r) = (lam.p, lam.r);
    let c = &(&pow(&int(r), r as u32) * &pow(&int(p), (p - 1) as u32)) * &pow(&int(r - p), (r - p) as u32);
    let mut roots = Vec::new();
    for i in 1..p {
        roots.push(Affine::new(Rational::one(), (int(i) + &lam.a) / int(p)));
    }
    for j in 0..r - p {
        roots.push(Affine::new(Rational::one(), (int(j) - &lam.a) / int(r - p)));
    }
    for j in 0..r {
        roots.push(Affine::new(Rational::one(), (int(j) - Rational::new(1.into(), 2.into())) / int(r)));
    }
    let xs = WxRatFunc::x_powers(-(r as i32), (r - p) as i32);
    Ok((&xs * &WxRatFunc::product(&roots)).scale(&c))
}

/// (r/x)^r (x-1)^{r-p} prod_{i<r}(w + i/r); for a solution this equals R * phi22.
pub fn r_phi22_formula(lam: &HyperData) -> WxRatFunc {
    let r = lam.r;
    let roots: Vec<Affine> = (0..r).map(|i| Affine::new(Rational::one(), Rational::new(i.into(), r.into()))).collect();
    let xs = WxRatFunc::x_powers(-(r as i32), (r - lam.p) as i32).scale(&pow(&int(r), r as u32));
    &xs * &WxRatFunc::product(&roots)
}

/// Y(z; p) = p^p (r-p)^{r-p} z^r - r^r (1-z)^{r-p}.
pub fn leading_y_poly(p: i64, r: i64) -> UniPoly {
    let c = &pow(&int(p), p as u32) * &pow(&int(r - p), (r - p) as u32);
    let one_minus = UniPoly::from_ints(&[1, -1]);
    &UniPoly::monomial(c, r as usize) - &one_minus.pow((r - p) as u32).scale(&pow(&int(r), r as u32))
}

/// (Y value at a rational x if x is rational, Y polynomial, whether Y(x) = 0).
pub fn leading_y(lam: &HyperData) -> (Option<Rational>, UniPoly, bool) {
    let y = leading_y_poly(lam.p, lam.r);
    let v = lam.x.as_rational().map(|q| y.eval(&q));
    let zero = alg_is_root(&y, &lam.x);
    (v, y, zero)
}

/// True iff f(w, x) vanishes identically in w at the algebraic point x.
pub fn vanishes_at(f: &WxRatFunc, x: &AlgebraicReal) -> bool {
    f.numerator().coeffs().iter().all(|c| alg_is_root(c, x))
}

/// Specialize the w-polynomial f (x powers only in the denominator) at x,
/// returning the exact w-polynomial when x is rational.
pub fn specialize_rational(f: &WxRatFunc, x: &Rational) -> Result<UniPoly> {
    let v = f.eval_x(x)?;
    match v.as_w_polynomial() {
        Some((num, _, _)) => Ok(UniPoly::new(num.coeffs().iter().map(|c| c.coeff(0)).collect())),
        None => Err(Error::Invariant("specialization is not polynomial in w".into())),
    }
}

/// Leading coefficients (w^0 term) of the expansion of each entry at w = infinity.
pub fn leading_matrix(a: &Mat2) -> Result<[[WxRatFunc; 2]; 2]> {
    let lead = |f: &WxRatFunc| -> Result<WxRatFunc> {
        if f.is_zero() {
            return Ok(WxRatFunc::zero());
        }
        let (top, c) = f.expansion_at_infinity(1).ok_or_else(|| Error::Invariant("no expansion".into()))?;
        match top {
            t if t < 0 => Ok(WxRatFunc::zero()),
            0 => Ok(c[0].clone()),
            _ => Err(Error::Invariant(format!("entry grows like w^{top}"))),
        }
    };
    Ok([[lead(&a.e[0][0])?, lead(&a.e[0][1])?], [lead(&a.e[1][0])?, lead(&a.e[1][1])?]])
}

/// w^{-1} coefficient of an entry's expansion at infinity.
pub fn subleading(f: &WxRatFunc) -> Result<WxRatFunc> {
    if f.is_zero() {
        return Ok(WxRatFunc::zero());
    }
    let (top, c) = f.expansion_at_infinity(2).ok_or_else(|| Error::Invariant("no expansion".into()))?;
    match top {
        0 => Ok(c[1].clone()),
        -1 => Ok(c[0].clone()),
        t if t < -1 => Ok(WxRatFunc::zero()),
        _ => Err(Error::Invariant(format!("entry grows like w^{top}"))),
    }
}

/// The constant r^r (x-1)^{r-p} / (p^p (r-p)^{r-p} x^r).
pub fn leading_a22(p: i64, r: i64) -> WxRatFunc {
    let c = &pow(&int(r), r as u32) / (&pow(&int(p), p as u32) * &pow(&int(r - p), (r - p) as u32));
    WxRatFunc::x_powers(-(r as i32), (r - p) as i32).scale(&c)
}

/// Exact w^{-1} coefficient of A12, as (numerator in x, power of x in the
/// denominator, extra denominator factor r - p x).  The numerator is
/// (1-x)(p^p (r-p)^{r-p} x^r - r^r (x-1)^{r-p}) / (2r p^{p-1} (r-p)^{r-p}),
/// which is C2 * Y(x; p) whenever p and r have the same parity.
pub fn leading_a12_w1(p: i64, r: i64) -> (UniPoly, i32, UniPoly) {
    let c = Rational::one() / (&(&pow(&int(p), (p - 1) as u32) * &pow(&int(r - p), (r - p) as u32)) * &int(2 * r));
    let lead = &pow(&int(p), p as u32) * &pow(&int(r - p), (r - p) as u32);
    let y = &UniPoly::monomial(lead, r as usize) - &UniPoly::from_ints(&[-1, 1]).pow((r - p) as u32).scale(&pow(&int(r), r as u32));
    let num = (&UniPoly::from_ints(&[1, -1]) * &y).scale(&c);
    (num, r as i32 - 1, UniPoly::new(vec![int(r), int(-p)]))
}

/// C2 * Y(x; p) numerator in the same normalization as `leading_a12_w1`.
pub fn c2_y_numerator(p: i64, r: i64) -> UniPoly {
    let c = Rational::one() / (&(&pow(&int(p), (p - 1) as u32) * &pow(&int(r - p), (r - p) as u32)) * &int(2 * r));
    (&UniPoly::from_ints(&[1, -1]) * &leading_y_poly(p, r)).scale(&c)
}

pub fn phi_matrix_polys(phi: &PhiPolys) -> [&WxPoly; 4] {
    [phi.phi11.numerator(), phi.phi12.numerator(), phi.phi21.numerator(), phi.phi22.numerator()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn lam(p: i64, r: i64, a: Rational, x: Rational) -> HyperData {
        HyperData::boundary(p, r, a, AlgebraicReal::from_rational(x))
    }

    #[test]
    fn q_vanishes_for_solution() {
        let l = lam(1, 3, rat(0, 1), rat(3, 4));
        let a = A_of_lambda(&l).unwrap();
        let (r, q) = extract_RQ(&a);
        assert!(!q.is_zero());
        assert!(vanishes_at(&q, &l.x));
        let phi = extract_phi(&a, &l).unwrap();
        assert!(vanishes_at(&phi.phi12, &l.x));
        let p22 = specialize_rational(&phi.phi22, &rat(3, 4)).unwrap();
        assert_eq!(p22.degree(), Some(3));
        let p11 = specialize_rational(&phi.phi11, &rat(3, 4)).unwrap();
        assert_eq!(p11.degree(), Some(2));
        // phi11 * phi22 at x
        let prod = &p11 * &p22;
        let want = specialize_rational(&phi_product_formula(&l).unwrap(), &rat(3, 4)).unwrap();
        assert_eq!(prod, want);
        // R * phi22
        let rp = (&r * &phi.phi22).eval_x(&rat(3, 4)).unwrap();
        assert_eq!(rp, r_phi22_formula(&l).eval_x(&rat(3, 4)).unwrap());
        let (v, _, zero) = leading_y(&l);
        assert_eq!(v, Some(rat(0, 1)));
        assert!(zero);
    }

    #[test]
    fn q_nonzero_for_non_solution() {
        let l = lam(1, 2, rat(0, 1), rat(1, 2));
        let a = A_of_lambda(&l).unwrap();
        let (_, q) = extract_RQ(&a);
        assert!(!vanishes_at(&q, &l.x));
        let (v, _, zero) = leading_y(&l);
        assert_eq!(v, Some(rat(-7, 4)));
        assert!(!zero);
    }

    #[test]
    fn determinant_identity() {
        for (p, r, a) in [(1, 1, rat(1, 3)), (1, 2, rat(0, 1)), (2, 3, rat(-2, 5)), (2, 4, rat(1, 7)), (3, 5, rat(5, 3)), (4, 4, rat(1, 9))] {
            let l = lam(p, r, a, rat(1, 2));
            let m = A_of_lambda(&l).unwrap();
            assert_eq!(m.det(), det_formula(&l).unwrap(), "p={p} r={r}");
        }
    }

    #[test]
    fn r_equals_one_matches_a13() {
        let l = lam(1, 1, rat(2, 5), rat(1, 3));
        let a = A_of_lambda(&l).unwrap();
        let phi = extract_phi(&a, &l).unwrap();
        assert_eq!(phi.phi11, WxRatFunc::one());
        // phi12 = beta (z - 1)
        assert_eq!(phi.phi12, (&WxRatFunc::xm1()).scale(&rat(1, 2)));
        // phi21 = -1/z
        assert_eq!(phi.phi21, -&WxRatFunc::x_powers(-1, 0));
    }

    #[test]
    fn degree_bounds_and_leading_terms() {
        for (p, r, a) in [(1, 2, rat(1, 5)), (2, 3, rat(0, 1)), (1, 4, rat(-1, 3)), (3, 4, rat(2, 7)), (1, 3, rat(0, 1)), (2, 4, rat(1, 2)), (1, 5, rat(3, 5))] {
            let l = lam(p, r, a, rat(1, 2));
            let m = A_of_lambda(&l).unwrap();
            let phi = extract_phi(&m, &l).unwrap();
            let ds: Vec<_> = phi_matrix_polys(&phi).iter().map(|q| q.deg_w().unwrap_or(0)).collect();
            assert!(ds[0] < r as usize && ds[1] < r as usize && ds[2] < r as usize && ds[3] <= r as usize);
            let lead = leading_matrix(&m).unwrap();
            assert_eq!(lead[0][0], WxRatFunc::one());
            assert!(lead[0][1].is_zero());
            assert_eq!(lead[1][1], leading_a22(p, r));
            // w^{-1} coefficient of A12 equals C2 Y(x)
            let s = subleading(&m.e[0][1]).unwrap();
            let (num, xpow, extra) = leading_a12_w1(p, r);
            for xv in [rat(1, 3), rat(2, 7), rat(5, 6)] {
                let got = s.eval(&rat(0, 1), &xv).unwrap();
                let want = num.eval(&xv) / (crate::exact::rational::powi(&xv, xpow as i64) * extra.eval(&xv));
                assert_eq!(got, want, "p={p} r={r} x={xv}");
            }
            if (r - p) % 2 == 0 {
                assert_eq!(num, c2_y_numerator(p, r));
            } else {
                assert_ne!(num, c2_y_numerator(p, r));
            }
        }
    }

    #[test]
    fn y_polynomials() {
        assert_eq!(leading_y_poly(1, 3), UniPoly::from_ints(&[-27, 54, -27, 4]));
        let y = leading_y_poly(2, 4);
        assert_eq!(y, UniPoly::from_ints(&[-256, 512, -256, 0, 16]));
        // root x = 2 sqrt 2 - 2 of z^2 + 4z - 4
        let x2 = crate::exact::isolate_root(&UniPoly::from_ints(&[-4, 4, 1]), &crate::exact::Interval::new(rat(0, 1), rat(1, 1))).unwrap();
        assert!(alg_is_root(&y, &x2));
    }

    #[test]
    fn rejects_bad_shape() {
        let mut l = lam(1, 3, rat(0, 1), rat(3, 4));
        l.b = rat(1, 3);
        assert!(A_of_lambda(&l).is_err());
        assert!(A_of_lambda(&lam(4, 3, rat(0, 1), rat(1, 2))).is_err());
    }
}

//! Duality, reciprocity, multiples and the symmetries of the square.

use super::assemble::{build_certificate, division_block, multiset_minus, GpfCertificate};
use crate::data::{half, HyperData};
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Dual,
    Reciprocal,
    Multiple(i64),
    Swap,
    Euler,
}

/// a' = 1 - 2p/r - a; p, r and x are kept.
pub fn dual(lam: &HyperData) -> HyperData {
    let a = int(1) - rat(2 * lam.p, lam.r) - &lam.a;
    HyperData::new(lam.p, lam.q, lam.r, a, lam.b.clone(), lam.x.clone())
}

/// v'_i = 1 - 2/r - v*_i.
pub fn dual_v(v_star: &[Rational], r: i64) -> Vec<Rational> {
    let base = int(1) - rat(2, r);
    let mut out: Vec<Rational> = v_star.iter().map(|v| &base - v).collect();
    out.sort();
    out
}

/// (p, q, r; a, b; x) -> (-p, -q, r-p-q; ((r-q)(1-a) - pb)/(r-p-q), b; 1-x).
pub fn reciprocal(lam: &HyperData) -> Result<HyperData> {
    let m = lam.r - lam.p - lam.q;
    if m == 0 {
        return Err(Error::Domain(format!("reciprocal needs r - p - q != 0: {lam}")));
    }
    let a = (int(lam.r - lam.q) * (int(1) - &lam.a) - int(lam.p) * &lam.b) / int(m);
    Ok(HyperData::new(-lam.p, -lam.q, m, a, lam.b.clone(), lam.x.one_minus()))
}

/// v_check_i = v_i - (1/2 - a)/(r-p) over the r - p entries left once the
/// division block {(i+a)/p} is set aside.
pub fn reciprocal_v(v: &[Rational], lam: &HyperData) -> Result<Vec<Rational>> {
    let rest = multiset_minus(v, &division_block(lam.p, &lam.a))
        .ok_or_else(|| Error::Invariant(format!("division relation fails, v cannot be arranged: {lam}")))?;
    let c = (half() - &lam.a) / int(lam.r - lam.p);
    let mut out: Vec<Rational> = rest.iter().map(|q| q - &c).collect();
    out.sort();
    Ok(out)
}

pub fn multiple(lam: &HyperData, k: i64) -> Result<HyperData> {
    if k < 1 {
        return Err(Error::Precondition(format!("multiple needs k >= 1, got {k}")));
    }
    Ok(HyperData::new(k * lam.p, k * lam.q, k * lam.r, lam.a.clone(), lam.b.clone(), lam.x.clone()))
}

/// {(v_i + m)/k : m < k}, sorted.
pub fn multiple_v(v: &[Rational], k: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = v.iter().flat_map(|q| (0..k).map(move |m| (q + int(m)) / int(k))).collect();
    out.sort();
    out
}

/// The certificate of k lambda, assembled from the multiplication formula;
/// the numeric constants are refitted at the same precision.
pub fn gpf_multiple(cert: &GpfCertificate, k: i64) -> Result<GpfCertificate> {
    let lam = multiple(&cert.lambda, k)?;
    let precision = cert.constants.c.precision_bits;
    let base = cert.multiple_of.map_or(cert.p(), |(_, p0)| p0);
    let out = build_certificate(lam, cert.s, cert.j, base, precision)?;
    if out.v != multiple_v(&cert.v, k) || out.v_star != multiple_v(&cert.v_star, k) {
        return Err(Error::Invariant(format!("multiplication formula disagrees with the assembled v for k = {k}")));
    }
    Ok(out)
}

pub fn square_symmetry(lam: &HyperData, kind: TransformKind) -> Result<HyperData> {
    match kind {
        TransformKind::Swap => Ok(HyperData::new(lam.q, lam.p, lam.r, lam.b.clone(), lam.a.clone(), lam.x.clone())),
        TransformKind::Euler => Ok(HyperData::new(lam.r - lam.q, lam.r - lam.p, lam.r, -&lam.b, -&lam.a, lam.x.clone())),
        TransformKind::Dual => Ok(dual(lam)),
        TransformKind::Reciprocal => reciprocal(lam),
        TransformKind::Multiple(k) => multiple(lam, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arguments::x_of_s;
    use crate::data::Region;
    use crate::exact::AlgebraicReal;

    fn ex21() -> HyperData {
        HyperData::boundary(1, 3, int(0), AlgebraicReal::from_rational(rat(3, 4)))
    }

    #[test]
    fn dual_examples() {
        let d = dual(&ex21());
        assert_eq!(d.a, rat(1, 3));
        assert_eq!(dual(&d), ex21());
        let two = HyperData::boundary(2, 4, int(0), x_of_s(2).unwrap());
        assert_eq!(dual(&two), two);
        let vp = dual_v(&[rat(-1, 6), int(0), rat(1, 6)], 3);
        assert_eq!(vp, vec![rat(1, 6), rat(1, 3), rat(1, 2)]);
    }

    #[test]
    fn reciprocal_examples() {
        let rc = reciprocal(&ex21()).unwrap();
        assert_eq!((rc.p, rc.q, rc.r, rc.a.clone(), rc.b.clone()), (-1, 0, 2, rat(5, 4), rat(1, 2)));
        assert_eq!(rc.x.as_rational(), Some(rat(1, 4)));
        assert_eq!(rc.region(), Some(Region::J));
        let rc2 = reciprocal(&dual(&ex21())).unwrap();
        assert_eq!(rc2.a, rat(3, 4));
        let two = HyperData::boundary(2, 4, int(0), x_of_s(2).unwrap());
        let rc3 = reciprocal(&two).unwrap();
        assert_eq!((rc3.p, rc3.r, rc3.a.clone()), (-2, 2, rat(3, 2)));
        // 1 - (2 sqrt 2 - 2) = 3 - 2 sqrt 2 is a root of z^2 - 6z + 1
        let m = rc3.x.defining().monic();
        assert_eq!(m, crate::exact::UniPoly::from_ints(&[1, -6, 1]));
        let vc = reciprocal_v(&[int(0), rat(3, 8), rat(1, 2), rat(5, 8)], &two).unwrap();
        assert_eq!(vc, vec![rat(1, 8), rat(3, 8)]);
    }

    #[test]
    fn square_involutions() {
        let lam = HyperData::new(2, 1, 7, rat(1, 3), rat(-2, 5), AlgebraicReal::from_rational(rat(1, 3)));
        for kind in [TransformKind::Swap, TransformKind::Euler] {
            let once = square_symmetry(&lam, kind).unwrap();
            assert_eq!(square_symmetry(&once, kind).unwrap(), lam);
        }
        // Euler then swap carry the north side q = r into the region I
        let north = HyperData::new(2, 5, 5, rat(1, 3), rat(1, 2), AlgebraicReal::from_rational(rat(1, 3)));
        let west = square_symmetry(&north, TransformKind::Euler).unwrap();
        assert_eq!((west.p, west.q, west.r), (0, 3, 5));
        let south = square_symmetry(&west, TransformKind::Swap).unwrap();
        assert_eq!(south.region(), Some(Region::I));
        assert_eq!(multiple(&lam, 1).unwrap(), lam);
        assert!(multiple(&lam, 0).is_err());
        assert_eq!(multiple_v(&[int(0), rat(1, 2)], 2), vec![int(0), rat(1, 4), rat(1, 2), rat(3, 4)]);
    }
}

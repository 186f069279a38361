//! The v-parameters of a certified solution, found by exact trial division
//! of P(w; lambda) over the finite candidate multiset.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::transforms::{dual_v, reciprocal_v};
use crate::contiguous::WxPoly;
use crate::data::HyperData;
use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rational, int, pow};
use crate::exact::{alg_is_root, rat, AlgebraicReal, Rational, UniPoly};
use crate::kernels::p_poly;
use crate::numeric::real::rational_to_decimal;

/// A numerically determined value and the working precision behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constant {
    pub value: String,
    pub precision_bits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    pub c: Constant,
    pub c_prime: Constant,
    pub c_check: Constant,
    pub delta: Constant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpfCertificate {
    pub lambda: HyperData,
    pub s: i64,
    pub j: i64,
    pub j_prime: i64,
    /// p(s - 1), even for every solution.
    pub parity: i64,
    pub v: Vec<Rational>,
    pub v_star: Vec<Rational>,
    pub v_prime: Vec<Rational>,
    pub v_check: Vec<Rational>,
    pub sum_check: Rational,
    /// p^p (r-p)^(r-p) r^-r
    pub delta: Rational,
    pub constants: Constants,
    pub primitive: bool,
    /// (k, p0) when lambda = k (p0, 0, r/k; a, 1/2; x).
    pub multiple_of: Option<(i64, i64)>,
}

impl GpfCertificate {
    pub fn p(&self) -> i64 {
        self.lambda.p
    }

    pub fn r(&self) -> i64 {
        self.lambda.r
    }

    pub fn a(&self) -> &Rational {
        &self.lambda.a
    }

    pub fn x(&self) -> &AlgebraicReal {
        &self.lambda.x
    }

    /// {i/r}, the numerator offsets of f(w; lambda) and f(w; lambda').
    pub fn u(&self) -> Vec<Rational> {
        (0..self.r()).map(|i| rat(i, self.r())).collect()
    }

    /// {i/(r-p)}, the numerator offsets of f(w; reciprocal).
    pub fn u_check(&self) -> Vec<Rational> {
        let m = self.r() - self.p();
        (0..m).map(|i| rat(i, m)).collect()
    }
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v
}

/// {(i+a)/p} ++ {(j-a)/(r-p)} ++ {(j-1/2)/r}, sorted.
pub fn candidates(p: i64, r: i64, a: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(2 * r as usize);
    out.extend((0..p).map(|i| (int(i) + a) / int(p)));
    out.extend((0..r - p).map(|j| (int(j) - a) / int(r - p)));
    out.extend((0..r).map(|j| (int(j) - rat(1, 2)) / int(r)));
    sorted(out)
}

/// {(i+a)/p}, the entries fixed by the division relation.
pub fn division_block(p: i64, a: &Rational) -> Vec<Rational> {
    sorted((0..p).map(|i| (int(i) + a) / int(p)).collect())
}

pub fn multiset_counts(v: &[Rational]) -> BTreeMap<Rational, usize> {
    let mut m = BTreeMap::new();
    for q in v {
        *m.entry(q.clone()).or_insert(0) += 1;
    }
    m
}

/// whole minus part, or None when part is not contained in whole.
pub fn multiset_minus(whole: &[Rational], part: &[Rational]) -> Option<Vec<Rational>> {
    let mut m = multiset_counts(whole);
    for q in part {
        let c = m.get_mut(q)?;
        if *c == 0 {
            return None;
        }
        *c -= 1;
    }
    Some(m.into_iter().flat_map(|(q, c)| std::iter::repeat(q).take(c)).collect())
}

/// Cancels common entries of numerator and denominator offsets.
pub fn gamma_quotient(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut n = multiset_counts(num);
    let mut d = multiset_counts(den);
    for (q, c) in n.iter_mut() {
        if let Some(e) = d.get_mut(q) {
            let k = (*c).min(*e);
            *c -= k;
            *e -= k;
        }
    }
    let flat = |m: BTreeMap<Rational, usize>| m.into_iter().flat_map(|(q, c)| std::iter::repeat(q).take(c)).collect();
    (flat(n), flat(d))
}

/// Gamma-quotient in display form, e.g. "Γ(w+1/3)Γ(w+2/3) / Γ(w+1/2)^2".
pub fn format_gamma_quotient(num: &[Rational], den: &[Rational]) -> String {
    fn side(v: &[Rational]) -> String {
        if v.is_empty() {
            return "1".into();
        }
        multiset_counts(v)
            .into_iter()
            .map(|(q, c)| {
                let arg = if q.is_zero() {
                    "w".to_string()
                } else if q < Rational::zero() {
                    format!("w-{}", fmt_rational(&-q))
                } else {
                    format!("w+{}", fmt_rational(&q))
                };
                if c > 1 {
                    format!("Γ({arg})^{c}")
                } else {
                    format!("Γ({arg})")
                }
            })
            .collect()
    }
    format!("{} / {}", side(num), side(den))
}

struct AtX<'a> {
    x: &'a AlgebraicReal,
    modulus: Option<UniPoly>,
}

impl AtX<'_> {
    fn reduce(&self, c: &UniPoly) -> UniPoly {
        match &self.modulus {
            Some(m) => c.div_rem(m).1,
            None => c.clone(),
        }
    }

    fn vanishes(&self, c: &UniPoly) -> bool {
        c.is_zero() || alg_is_root(c, self.x)
    }

    /// Reduce every coefficient and drop leading ones that vanish at x.
    fn normalize(&self, f: &WxPoly) -> WxPoly {
        let mut c: Vec<UniPoly> = f.coeffs().iter().map(|c| self.reduce(c)).collect();
        while c.last().is_some_and(|l| self.vanishes(l)) {
            c.pop();
        }
        WxPoly::new(c)
    }
}

/// v = negated roots of P(w; lambda) in w at the given x, with multiplicity,
/// and v* = the complementary candidates.
pub fn assemble_v(lam: &HyperData) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let (p, r) = (lam.p, lam.r);
    let cands = candidates(p, r, &lam.a);
    let at = AtX {
        x: &lam.x,
        modulus: lam.x.as_rational().map_or_else(|| Some(lam.x.defining().clone()), |_| None),
    };
    let mut poly = at.normalize(&p_poly(lam)?);
    match lam.x.as_rational() {
        Some(q) => poly = WxPoly::from_w(&poly.at_x(&q)),
        None => {}
    }
    if poly.deg_w() != Some(r as usize) {
        return Err(Error::Invariant(format!("P(w) has degree {:?} at x, expected {r}", poly.deg_w())));
    }
    let mut v = Vec::with_capacity(r as usize);
    for (c, mult) in multiset_counts(&cands) {
        for _ in 0..mult {
            let (q, rem) = poly.div_linear(&-c.clone());
            if !at.vanishes(&at.reduce(&rem)) {
                break;
            }
            poly = at.normalize(&q);
            v.push(c.clone());
        }
    }
    if poly.deg_w() != Some(0) {
        return Err(Error::Invariant(format!(
            "P(w) has roots outside the candidate multiset; {} of {r} found",
            v.len()
        )));
    }
    let v_star = multiset_minus(&cands, &v).ok_or_else(|| Error::Invariant("v is not a sub-multiset of the candidates".into()))?;
    Ok((sorted(v), sorted(v_star)))
}

pub fn delta(p: i64, r: i64) -> Rational {
    let m = r - p;
    pow(&int(p), p as u32) * pow(&int(m), m as u32) / pow(&int(r), r as u32)
}

/// Exact invariants of an assembled certificate; Err names the first one broken.
pub fn check_structure(lam: &HyperData, v: &[Rational], v_star: &[Rational], v_prime: &[Rational]) -> Result<()> {
    let r = lam.r;
    let target = rat(r - 1, 2);
    let broken = |what: &str| Err(Error::Invariant(format!("{what} for {lam}")));
    if v.len() != r as usize || v_star.len() != r as usize {
        return broken("|v| = |v*| = r fails");
    }
    if v.iter().any(|q| q < &Rational::zero() || q >= &Rational::one()) {
        return broken("v outside [0, 1)");
    }
    if v.iter().sum::<Rational>() != target || v_prime.iter().sum::<Rational>() != target {
        return broken("sum rule fails");
    }
    if multiset_minus(v, &division_block(lam.p, &lam.a)).is_none() {
        return broken("division relation fails");
    }
    Ok(())
}

/// Full certificate for a certified lambda = (p, 0, ps; j/s, 1/2; x_s);
/// `base` is the smallest p0 with (p0, s, j) certified.
pub fn build_certificate(lam: HyperData, s: i64, j: i64, base: i64, precision: usize) -> Result<GpfCertificate> {
    let (v, v_star) = assemble_v(&lam)?;
    let v_prime = dual_v(&v_star, lam.r);
    check_structure(&lam, &v, &v_star, &v_prime)?;
    let v_check = reciprocal_v(&v, &lam)?;
    let sum_check = v.iter().sum();
    let d = delta(lam.p, lam.r);
    let fitted = crate::numeric::verify::fit_constants(&lam, &v, &v_prime, &v_check, precision)?;
    let digits = (precision as f64 * std::f64::consts::LOG10_2).floor() as usize;
    let constant = |value: String| Constant { value, precision_bits: precision };
    let constants = Constants {
        c: constant(fitted.c.re.to_decimal(digits)),
        c_prime: constant(fitted.c_prime.re.to_decimal(digits)),
        c_check: constant(fitted.c_check.re.to_decimal(digits)),
        delta: constant(rational_to_decimal(&d, digits)),
    };
    let p = lam.p;
    Ok(GpfCertificate {
        s,
        j,
        j_prime: s - 2 - j,
        parity: p * (s - 1),
        v,
        v_star,
        v_prime,
        v_check,
        sum_check,
        delta: d,
        constants,
        primitive: base == p,
        multiple_of: (base != p).then_some((p / base, base)),
        lambda: lam,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arguments::x_of_s;

    fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
        sorted(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn candidate_multiset() {
        let c = candidates(1, 3, &int(0));
        assert_eq!(c, qs(&[(-1, 6), (0, 1), (0, 1), (1, 6), (1, 2), (1, 2)]));
    }

    #[test]
    fn v_sets_rational_x() {
        let x = AlgebraicReal::from_rational(rat(3, 4));
        let (v, vs) = assemble_v(&HyperData::boundary(1, 3, int(0), x.clone())).unwrap();
        assert_eq!(v, qs(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(vs, qs(&[(0, 1), (-1, 6), (1, 6)]));
        let (v, _) = assemble_v(&HyperData::boundary(1, 3, rat(1, 3), x)).unwrap();
        assert_eq!(v.iter().sum::<Rational>(), int(1));
    }

    #[test]
    fn v_sets_irrational_x() {
        let lam = HyperData::boundary(2, 4, int(0), x_of_s(2).unwrap());
        let (v, _) = assemble_v(&lam).unwrap();
        assert_eq!(v, qs(&[(0, 1), (1, 2), (3, 8), (5, 8)]));
    }

    #[test]
    fn non_solution_is_rejected() {
        // (1, 0, 3; 1/3, 1/2; 1/2) is not a solution: P has no full candidate factorization
        let lam = HyperData::boundary(1, 3, rat(1, 3), AlgebraicReal::from_rational(rat(1, 2)));
        assert!(assemble_v(&lam).is_err());
    }

    #[test]
    fn quotient_cancellation() {
        let (n, d) = gamma_quotient(&qs(&[(0, 1), (1, 3), (2, 3)]), &qs(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(n, qs(&[(1, 3), (2, 3)]));
        assert_eq!(d, qs(&[(1, 2), (1, 2)]));
        assert_eq!(format_gamma_quotient(&n, &d), "Γ(w+1/3)Γ(w+2/3) / Γ(w+1/2)^2");
        assert_eq!(delta(1, 3), rat(4, 27));
    }
}

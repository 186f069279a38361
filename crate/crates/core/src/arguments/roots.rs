//! Real and complex roots of psi_s through the radial/angular decomposition.

use num_traits::{One, Zero};

use super::polys::{nontrivial_factor, psi_poly};
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{isolate_root, AlgebraicReal, Interval, Rational};
use crate::numeric::{BigComplex, Real};

/// ln t + (s-1) ln((s+t)/(s-1)); increasing in t, zero at c(s).
fn log_u(s: &Real, t: &Real) -> Real {
    let one = Real::one(s.prec());
    let s1 = s - &one;
    &t.ln() + &(&s1 * &((s + t) / &s1).ln())
}

/// c(s): the root in (0, 1) of t ((s+t)/(s-1))^(s-1) = 1, by bisection.
pub fn c_of_s(s: &Rational, precision: usize) -> Result<Real> {
    if *s <= Rational::one() {
        return Err(Error::Precondition(format!("c(s) needs s > 1, got {s}")));
    }
    let p = precision + 16;
    let sr = Real::from_rational(s, p);
    let (mut lo, mut hi) = (Real::zero(p), Real::one(p));
    if !log_u(&sr, &hi).is_positive() {
        return Err(Error::Numeric("c(s) not bracketed by (0, 1)".into()));
    }
    for _ in 0..precision + 8 {
        let mid = (&lo + &hi).scale_frac(1, 2);
        if log_u(&sr, &mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((&lo + &hi).scale_frac(1, 2).with_prec(precision))
}

/// c0 with c0 e^(c0 + 1) = 1.
pub fn c0(precision: usize) -> Real {
    let p = precision + 16;
    let (mut lo, mut hi) = (Real::zero(p), Real::one(p));
    let one = Real::one(p);
    for _ in 0..precision + 8 {
        let mid = (&lo + &hi).scale_frac(1, 2);
        let v = &mid * &(&mid + &one).exp();
        if v < one {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (&lo + &hi).scale_frac(1, 2).with_prec(precision)
}

/// G_s(theta) = sin(theta) s^s (-1)^(s-1) sin^(s-1)((s-1)theta) - (s-1)^(s-1) sin^s(s theta)
pub fn g_s(s: i64, theta: &Real) -> Real {
    let p = theta.prec();
    let ss = Real::from_i64(s, p).powi(s as usize);
    let s1 = Real::from_i64(s - 1, p).powi((s - 1) as usize);
    let a = (theta * &Real::from_i64(s - 1, p)).sin().powi((s - 1) as usize);
    let mut first = &(&theta.sin() * &ss) * &a;
    if s % 2 == 0 {
        first = -first;
    }
    let b = (theta * &Real::from_i64(s, p)).sin().powi(s as usize);
    &first - &(&s1 * &b)
}

#[derive(Clone, Debug)]
pub struct ComplexPair {
    pub j: usize,
    pub theta: Real,
    pub r: Real,
    pub rho: Real,
}

impl ComplexPair {
    pub fn root(&self) -> BigComplex {
        BigComplex::new(&self.r * &self.theta.cos(), &self.r * &self.theta.sin())
    }
}

#[derive(Clone, Debug)]
pub enum NegativeRoot {
    /// Even s: simple root -s - c(s).
    Simple { root: AlgebraicReal, c: Real },
    /// Odd s: the trivial double root 1 - s.
    Double(i64),
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct RootReport {
    pub s: i64,
    pub precision: usize,
    pub positive_root: AlgebraicReal,
    pub negative_root: NegativeRoot,
    pub complex_pairs: Vec<ComplexPair>,
    /// Roots counted with multiplicity.
    pub census: usize,
    pub checks: Vec<Check>,
}

impl RootReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

fn alg_to_real(a: &AlgebraicReal, p: usize) -> Real {
    Real::from_rational(&a.refine(p as u32 + 8).midpoint(), p)
}

/// R = (s-1) / (1 + (1 + ln(s-1))/(s-1)).
pub fn r_lower(s: i64, p: usize) -> Real {
    let s1 = Real::from_i64(s - 1, p);
    let one = Real::one(p);
    &s1 / &(&one + &(&(&one + &s1.ln()) / &s1))
}

fn theta_bisect(s: i64, j: usize, p: usize) -> Result<Real> {
    let two_pi_j = Real::pi(p).scale(2 * j as i64);
    let mut lo = &two_pi_j / &Real::from_i64(s, p);
    let mut hi = &two_pi_j / &Real::from_i64(s - 1, p);
    if !(g_s(s, &lo).is_positive() && g_s(s, &hi).is_negative()) {
        return Err(Error::Numeric(format!("G_{s} not bracketed on I_{j}")));
    }
    for _ in 0..p - 8 {
        let mid = (&lo + &hi).scale_frac(1, 2);
        let g = g_s(s, &mid);
        if g.is_zero() {
            return Ok(mid);
        }
        if g.is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((&lo + &hi).scale_frac(1, 2))
}

pub fn localize_roots(s: i64, precision: usize) -> Result<RootReport> {
    if s < 2 {
        return Err(Error::Precondition(format!("s = {s} must be at least 2")));
    }
    let p = precision + 32;
    let psi = psi_poly(s)?;
    let positive_root = isolate_root(&nontrivial_factor(s)?, &Interval::new(Rational::zero(), int(s - 1)))?;
    let mut checks = Vec::new();
    let mut check = |name: String, passed: bool| checks.push(Check { name, passed });

    let negative_root = if s % 2 == 0 {
        let root = isolate_root(&psi, &Interval::new(int(-s - 1), int(1 - s)))?;
        let c = c_of_s(&int(s), p)?;
        let rn = alg_to_real(&root, p);
        let diff = (&(&(-&rn) - &Real::from_i64(s, p)) - &c).abs();
        check("negative root equals -s - c(s)".into(), diff < Real::from_f64(2f64.powi(-(precision as i32) / 2), p));
        let inside = root.cmp_rational(&int(-s - 1)).is_gt() && root.cmp_rational(&int(1 - s)).is_lt();
        check("negative root in (-s-1, 1-s)".into(), inside);
        NegativeRoot::Simple { root, c }
    } else {
        let t = int(1 - s);
        let dpsi = psi.derivative();
        check(
            "1-s is a double root".into(),
            psi.eval(&t).is_zero() && dpsi.eval(&t).is_zero() && !dpsi.derivative().eval(&t).is_zero(),
        );
        NegativeRoot::Double(1 - s)
    };

    let m = (s / 2 - 1).max(0) as usize;
    let mut complex_pairs = Vec::with_capacity(m);
    let sr = Real::from_i64(s, p);
    for j in 1..=m {
        let theta = theta_bisect(s, j, p)?;
        let ss = (&theta * &sr).sin();
        let r = -(&(&sr * &(&theta * &Real::from_i64(s - 1, p)).sin()) / &ss);
        let rho = &(&sr * &theta.sin()) / &ss;
        complex_pairs.push(ComplexPair { j, theta, r, rho });
    }

    let census = 1 + if s % 2 == 0 { 1 } else { 2 } + 2 * complex_pairs.len();
    check(format!("root census {census} = {s}"), census == s as usize);

    let r0 = alg_to_real(&positive_root, p);
    let s1 = Real::from_i64(s - 1, p);
    let rho0 = &r0 + &sr;
    check("positive root below s-1".into(), r0 < s1);
    let mut chain = r0 < s1;
    let mut prev_r = r0.clone();
    let mut prev_rho = rho0.clone();
    let tol = Real::from_f64(2f64.powi(-(precision as i32) / 2), p);
    for c in &complex_pairs {
        chain &= prev_r < c.r && c.r < s1;
        chain &= prev_rho > c.rho && c.rho > Real::one(p);
        prev_r = c.r.clone();
        prev_rho = c.rho.clone();
        // radial equation r^(s-1) rho = (s-1)^(s-1)
        let radial = &c.r.powi((s - 1) as usize) * &c.rho;
        let target = s1.powi((s - 1) as usize);
        check(format!("radial equation at j = {}", c.j), ((&radial - &target).abs() / target) < tol);
        let alpha = c.root();
        let rho_direct = (&alpha + &BigComplex::from_i64(s, p)).abs();
        check(format!("rho_{} = |s + alpha_{}|", c.j, c.j), ((&rho_direct - &c.rho).abs() / c.rho.clone()) < tol);
        let val = eval_complex(&psi, &alpha);
        let scale = s1.powi((s - 1) as usize);
        check(format!("psi(alpha_{}) = 0", c.j), (val.abs() / scale) < tol);
        let lo = &Real::pi(p).scale(2 * c.j as i64) / &sr;
        let hi = &Real::pi(p).scale(2 * c.j as i64) / &s1;
        check(format!("theta_{} in I_{}", c.j, c.j), lo < c.theta && c.theta < hi);
    }
    check("ordering r_0 < ... < r_m < s-1 and rho_0 > ... > rho_m > 1".into(), chain);
    check("|alpha| < s-1 for nontrivial roots off the negative axis".into(), complex_pairs.iter().all(|c| c.r < s1) && r0 < s1);
    if s > 3 {
        check("r(0) > 1".into(), r0 > Real::one(p));
    }
    if s >= 26 {
        check("r(0) > R".into(), r0 > r_lower(s, p));
    }
    if let Some(last) = complex_pairs.last() {
        let pi = Real::pi(p);
        if s % 2 == 0 {
            let b = &sr * &(&pi / &s1).sin();
            check("rho_m > s sin(pi/(s-1)) > pi".into(), last.rho > b && b > pi);
        } else if s >= 7 {
            let b = &sr * &(&pi.scale(2) / &s1).sin();
            check("rho_m > s sin(2pi/(s-1))".into(), last.rho > b);
        } else if s == 5 {
            let b = &sr * &(&pi.scale(2) / &sr).sin();
            check("rho_m > 5 sin(2pi/5)".into(), last.rho > b);
        }
    }
    check("reconstruction matches psi_s".into(), reconstruction_error(s, &positive_root, &negative_root, &complex_pairs, p)? < tol);

    Ok(RootReport { s, precision, positive_root, negative_root, complex_pairs, census, checks })
}

fn eval_complex(f: &crate::exact::UniPoly, z: &BigComplex) -> BigComplex {
    let p = z.precision_bits();
    let mut acc = BigComplex::zero(p);
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * z) + &BigComplex::from_rational(c, p);
    }
    acc
}

/// Largest coefficient difference between psi_s and the product over the
/// reported roots, relative to (s-1)^(s-1).
fn reconstruction_error(s: i64, pos: &AlgebraicReal, neg: &NegativeRoot, pairs: &[ComplexPair], p: usize) -> Result<Real> {
    let mul_lin = |poly: &[Real], c: &Real| -> Vec<Real> {
        // poly * (z - c)
        let mut out = vec![Real::zero(p); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            out[i + 1] = &out[i + 1] + a;
            out[i] = &out[i] - &(a * c);
        }
        out
    };
    let mut poly = vec![Real::one(p)];
    poly = mul_lin(&poly, &alg_to_real(pos, p));
    match neg {
        NegativeRoot::Simple { root, .. } => poly = mul_lin(&poly, &alg_to_real(root, p)),
        NegativeRoot::Double(t) => {
            let t = Real::from_i64(*t, p);
            poly = mul_lin(&poly, &t);
            poly = mul_lin(&poly, &t);
        }
    }
    for c in pairs {
        // z^2 - 2 r cos(theta) z + r^2
        let b = -(&(&c.r * &c.theta.cos()).scale(2));
        let cc = &c.r * &c.r;
        let mut out = vec![Real::zero(p); poly.len() + 2];
        for (i, a) in poly.iter().enumerate() {
            out[i + 2] = &out[i + 2] + a;
            out[i + 1] = &out[i + 1] + &(a * &b);
            out[i] = &out[i] + &(a * &cc);
        }
        poly = out;
    }
    let psi = psi_poly(s)?;
    if poly.len() != psi.coeffs().len() {
        return Ok(Real::from_i64(1 << 20, p));
    }
    let scale = Real::from_i64(s - 1, p).powi((s - 1) as usize);
    let mut worst = Real::zero(p);
    for (a, c) in poly.iter().zip(psi.coeffs()) {
        let d = (a - &Real::from_rational(c, p)).abs() / scale.clone();
        worst = worst.max(&d);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::exact::UniPoly;

    #[test]
    fn c_of_s_values() {
        let p = 128;
        let c2 = c_of_s(&int(2), p).unwrap();
        let expect = &Real::from_i64(2, p).sqrt() - &Real::one(p);
        assert!((&c2 - &expect).abs() < Real::from_f64(1e-35, p));
        let c0v = c0(p);
        assert_eq!(c0v.to_decimal(6), "0.278465");
        let big = c_of_s(&int(1_000_000), p).unwrap();
        assert!((&big - &c0v).abs() < Real::from_f64(1e-3, p));
        let mut prev = c2;
        for s in 3..=30 {
            let c = c_of_s(&int(s), p).unwrap();
            assert!(c < prev && c.is_positive() && c < Real::one(p));
            prev = c;
        }
        assert!(c_of_s(&rat(1, 1), p).is_err());
    }

    #[test]
    fn c_of_s_matches_exact_root() {
        // for integer s, c(s) is the root in (0, 1) of t (s + t)^(s-1) - (s-1)^(s-1)
        for s in [3i64, 6, 9] {
            let t = UniPoly::z();
            let f = &(&t * &UniPoly::from_ints(&[s, 1]).pow((s - 1) as u32))
                - &UniPoly::constant(crate::exact::rational::pow(&int(s - 1), (s - 1) as u32));
            let a = isolate_root(&f, &Interval::new(Rational::zero(), Rational::one())).unwrap();
            let c = c_of_s(&int(s), 128).unwrap();
            assert!((&alg_to_real(&a, 128) - &c).abs() < Real::from_f64(1e-30, 128));
        }
    }

    #[test]
    fn small_reports() {
        let r3 = localize_roots(3, 128).unwrap();
        assert!(r3.all_passed(), "{:?}", r3.failed());
        assert_eq!(r3.positive_root.as_rational(), Some(rat(1, 1)));
        assert!(matches!(r3.negative_root, NegativeRoot::Double(-2)));
        let r4 = localize_roots(4, 128).unwrap();
        assert!(r4.all_passed(), "{:?}", r4.failed());
        assert_eq!(r4.complex_pairs.len(), 1);
        let th = r4.complex_pairs[0].theta.to_f64();
        assert!(th > std::f64::consts::FRAC_PI_2 && th < 2.0 * std::f64::consts::PI / 3.0);
        let r12 = localize_roots(12, 128).unwrap();
        assert!(r12.all_passed(), "{:?}", r12.failed());
        assert!(r12.checks.iter().any(|c| c.name.starts_with("rho_m > s sin(pi/(s-1))")));
    }
}

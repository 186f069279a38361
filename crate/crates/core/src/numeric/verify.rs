//! Residual checks of certified gamma product formulas at sample points.

use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::complex::BigComplex;
use super::gamma::gamma;
use super::hyp::hyp2f1;
use super::real::Real;
use crate::certify::transforms::{dual, reciprocal};
use crate::certify::GpfCertificate;
use crate::contiguous::{extract_RQ, A_of_lambda, WxRatFunc};
use crate::data::HyperData;
use crate::error::{Error, Result};
use crate::certify::assemble::{assemble_v, check_structure, delta};
use crate::certify::transforms::{dual_v, reciprocal_v};
use crate::exact::rational::{int, parse_decimal};
use crate::exact::{rat, AlgebraicReal, Rational, UniPoly};

pub const DEFAULT_SEED: u64 = 20_240_601;
const RANDOM_SAMPLES: usize = 8;

/// x as a real, from its isolating interval.
pub fn x_real(x: &AlgebraicReal, precision: usize) -> Real {
    let refined = x.refine(precision as u32 + 16);
    Real::from_rational(&refined.midpoint(), precision)
}

fn c(q: &Rational, p: usize) -> BigComplex {
    BigComplex::from_rational(q, p)
}

fn lift(r: &Real, p: usize) -> BigComplex {
    BigComplex::real(r.with_prec(p))
}

/// (alpha, beta, gamma) = (pw + a, qw + b, rw).
fn params(w: &BigComplex, lam: &HyperData, p: usize) -> (BigComplex, BigComplex, BigComplex) {
    let scale = |k: i64| w.scale(&Real::from_i64(k, p));
    (&scale(lam.p) + &c(&lam.a, p), &scale(lam.q) + &c(&lam.b, p), scale(lam.r))
}

/// f(w; lambda) = 2F1(pw + a, qw + b; rw; x).
pub fn f_val(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let (a, b, g) = params(w, lam, precision);
    hyp2f1(&a, &b, &g, &lift(&x_real(&lam.x, precision), precision), precision)
}

/// x^(1-gamma) (1-x)^(gamma-alpha-beta), shared by g and h.
fn prefactor(w: &BigComplex, lam: &HyperData, x: &Real, p: usize) -> BigComplex {
    let (a, b, g) = params(w, lam, p);
    let one = BigComplex::one(p);
    let xc = lift(x, p);
    let ym = &one - &xc;
    &xc.pow(&(&one - &g)) * &ym.pow(&(&(&g - &a) - &b))
}

/// g(w; lambda) from its definition through 2G1.
pub fn g_val(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let p = precision;
    let x = x_real(&lam.x, p);
    let (a, b, g) = params(w, lam, p);
    let one = BigComplex::one(p);
    let two = BigComplex::from_i64(2, p);
    let f = hyp2f1(&(&one - &a), &(&one - &b), &(&two - &g), &lift(&x, p), p)?;
    Ok(&prefactor(w, lam, &x, p) * &f)
}

/// g(w; lambda) = prefactor * f(w' + 1; lambda'), w' = 2/r - 1 - w.
pub fn g_val_dual(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let p = precision;
    let x = x_real(&lam.x, p);
    let w1 = &c(&rat(2, lam.r), p) - w;
    Ok(&prefactor(w, lam, &x, p) * &f_val(&w1, &dual(lam), p)?)
}

/// h(w; lambda) from its definition through 2H1.
pub fn h_val(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let p = precision;
    let x = x_real(&lam.x, p);
    let (a, b, g) = params(w, lam, p);
    let one = BigComplex::one(p);
    let third = &(&(&g - &a) - &b) + &one;
    let f = hyp2f1(&(&one - &a), &(&one - &b), &third, &lift(&(&Real::one(p) - &x), p), p)?;
    Ok(&prefactor(w, lam, &x, p) * &f)
}

/// h(w; lambda) = prefactor * f(w + c; reciprocal), c = (1-a-b)/(r-p-q).
pub fn h_val_reciprocal(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let p = precision;
    let x = x_real(&lam.x, p);
    let m = lam.r - lam.p - lam.q;
    let shift = (int(1) - &lam.a - &lam.b) / int(m);
    Ok(&prefactor(w, lam, &x, p) * &f_val(&(w + &c(&shift, p)), &reciprocal(lam)?, p)?)
}

/// prod Gamma(w + u) / prod Gamma(w + v).
pub fn gamma_ratio(w: &BigComplex, num: &[Rational], den: &[Rational], p: usize) -> Result<BigComplex> {
    let mut acc = BigComplex::one(p);
    for u in num {
        acc = &acc * &gamma(&(w + &c(u, p)), p)?;
    }
    for v in den {
        acc = &acc / &gamma(&(w + &c(v, p)), p)?;
    }
    Ok(acc)
}

fn sine_ratio(w: &BigComplex, num: &[Rational], den: &[Rational], p: usize) -> BigComplex {
    let pi = BigComplex::real(Real::pi(p));
    let mut acc = BigComplex::one(p);
    for u in num {
        acc = &acc * &(&pi * &(w + &c(u, p))).sin();
    }
    for v in den {
        acc = &acc / &(&pi * &(w + &c(v, p))).sin();
    }
    acc
}

fn delta_pow(cert: &GpfCertificate, w: &BigComplex, p: usize) -> BigComplex {
    BigComplex::from_rational(&cert.delta, p).pow(w)
}

/// The closed-form side of each identity family without its constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gpf1,
    Gpf2,
    GpfR,
    GpfG,
    GpfH,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Gpf1, Family::Gpf2, Family::GpfR, Family::GpfG, Family::GpfH];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Gpf1 => "gpf1",
            Family::Gpf2 => "gpf2",
            Family::GpfR => "gpf-r",
            Family::GpfG => "GPF-g",
            Family::GpfH => "gpf-h",
        }
    }
}

/// Offsets (i - 1)/r, i = 0..r-1.
fn shifted_u(r: i64) -> Vec<Rational> {
    (0..r).map(|i| rat(i - 1, r)).collect()
}

/// c = (1/2 - a)/(r - p).
fn h_shift(cert: &GpfCertificate) -> Rational {
    (rat(1, 2) - cert.a()) / int(cert.r() - cert.p())
}

/// Gamma(w + c + j/(r-p)), j = 0..r-p-1, over Gamma(w + v_i) for the r - p
/// entries of v outside the division block.
pub fn h_offsets(cert: &GpfCertificate) -> (Vec<Rational>, Vec<Rational>) {
    let m = cert.r() - cert.p();
    let cc = h_shift(cert);
    let num = (0..m).map(|j| &cc + rat(j, m)).collect();
    let den = cert.v_check.iter().map(|v| v + &cc).collect();
    (num, den)
}

fn lhs(family: Family, cert: &GpfCertificate, w: &BigComplex, p: usize) -> Result<BigComplex> {
    match family {
        Family::Gpf1 => f_val(w, &cert.lambda, p),
        Family::Gpf2 => f_val(w, &dual(&cert.lambda), p),
        Family::GpfR => f_val(w, &reciprocal(&cert.lambda)?, p),
        Family::GpfG => g_val(w, &cert.lambda, p),
        Family::GpfH => h_val(w, &cert.lambda, p),
    }
}

fn model(family: Family, cert: &GpfCertificate, w: &BigComplex, p: usize) -> Result<BigComplex> {
    match family {
        Family::Gpf1 => gamma_ratio(w, &cert.u(), &cert.v, p),
        Family::Gpf2 => gamma_ratio(w, &cert.u(), &cert.v_prime, p),
        Family::GpfR => gamma_ratio(w, &cert.u_check(), &cert.v_check, p),
        Family::GpfG => {
            let su = shifted_u(cert.r());
            let s = sine_ratio(w, &cert.v_star, &su, p);
            Ok(&(&delta_pow(cert, w, p) * &s) * &gamma_ratio(w, &cert.v_star, &su, p)?)
        }
        Family::GpfH => {
            let (num, den) = h_offsets(cert);
            Ok(&delta_pow(cert, w, p) * &gamma_ratio(w, &num, &den, p)?)
        }
    }
}

/// Every offset whose integer translates are poles or zeros of some factor.
pub fn sensitive_offsets(cert: &GpfCertificate) -> Vec<Rational> {
    let mut o: Vec<Rational> = cert.u();
    o.extend(cert.v.iter().cloned());
    o.extend(cert.v_star.iter().cloned());
    o.extend(cert.v_prime.iter().map(|v| -v));
    o.extend(cert.v_check.iter().cloned());
    o.extend(cert.u_check().into_iter().map(|u| u + h_shift(cert)));
    let mut frac: Vec<Rational> = o.iter().map(|q| q - Rational::from_integer(q.floor().to_integer())).collect();
    frac.sort();
    frac.dedup();
    frac
}

fn dist_to_integer(q: &Rational) -> f64 {
    let f = q - Rational::from_integer(q.floor().to_integer());
    let f = f.to_f64().unwrap_or(f64::NAN);
    f.min(1.0 - f)
}

/// Pole threshold: 1/20, tightened when the offsets crowd the unit interval.
pub fn pole_threshold(offsets: &[Rational]) -> f64 {
    (1.0 / 20.0f64).min(0.3 / offsets.len().max(1) as f64)
}

pub fn near_pole(w: &Rational, offsets: &[Rational], eps: f64) -> bool {
    offsets.iter().any(|o| dist_to_integer(&(w + o)) < eps)
}

/// 1/5 + k/7 for k = 0..6, then 8 seeded rationals in (0, 3); each moved off
/// the pole set in steps of 1/50.
pub fn default_samples(offsets: &[Rational], seed: u64) -> Vec<Rational> {
    let eps = pole_threshold(offsets);
    let step = rat(1, 50);
    let mut out = Vec::new();
    for k in 0..7 {
        let mut w = rat(1, 5) + rat(k, 7);
        let mut tries = 0;
        while near_pole(&w, offsets, eps) && tries < 50 {
            w += &step;
            tries += 1;
        }
        out.push(w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < 7 + RANDOM_SAMPLES {
        let w = rat(rng.gen_range(1..3000), 1000);
        if !near_pole(&w, offsets, eps) && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// Relative residual |a - b| / |b|.
pub fn rel_residual(a: &BigComplex, b: &BigComplex) -> Real {
    let d = (a - b).abs();
    let n = b.abs();
    if n.is_zero() {
        return d;
    }
    &d / &n
}

/// Decimal digits carried by `precision` bits.
pub fn digits(precision: usize) -> usize {
    (precision as f64 * std::f64::consts::LOG10_2).floor() as usize
}

/// 10^-(digits/2).
pub fn tolerance(precision: usize) -> Real {
    let p = precision;
    Real::from_i64(10, p).powr(&Real::from_i64(-((digits(p) / 2) as i64), p))
}

#[derive(Clone, Debug)]
pub struct Pass {
    pub precision: usize,
    pub constant: Option<BigComplex>,
    pub residuals: Vec<Real>,
    pub tolerance: Real,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub samples: Vec<Rational>,
    pub main: Pass,
    /// The same computation at twice the precision.
    pub doubled: Option<Pass>,
    pub verdict: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn worst(&self) -> Option<(Rational, Real)> {
        let k = self.main.residuals.len();
        let off = self.samples.len().checked_sub(k)?;
        (0..k)
            .max_by(|&i, &j| self.main.residuals[i].partial_cmp(&self.main.residuals[j]).unwrap_or(std::cmp::Ordering::Equal))
            .map(|i| (self.samples[i + off].clone(), self.main.residuals[i].clone()))
    }

    fn from_passes(identity: &str, samples: Vec<Rational>, main: Pass, doubled: Option<Pass>) -> Self {
        let flip = doubled.as_ref().is_some_and(|d| d.passed != main.passed);
        let verdict = main.passed && doubled.as_ref().map_or(true, |d| d.passed);
        VerificationReport {
            identity: identity.into(),
            samples,
            main,
            doubled,
            verdict,
            note: flip.then(|| "verdict changed under precision doubling".into()),
        }
    }
}

fn max_ok(residuals: &[Real], tol: &Real) -> bool {
    residuals.iter().all(|r| !r.is_nan() && r < tol)
}

/// Constant from samples[0], residuals at the remaining samples.
fn fit_and_check(family: Family, cert: &GpfCertificate, samples: &[Rational], p: usize) -> Result<Pass> {
    let (first, rest) = samples.split_first().ok_or_else(|| Error::Precondition("no samples".into()))?;
    let w0 = c(first, p);
    let k = &lhs(family, cert, &w0, p)? / &model(family, cert, &w0, p)?;
    let mut residuals = Vec::with_capacity(rest.len());
    for w in rest {
        let w = c(w, p);
        let l = lhs(family, cert, &w, p)?;
        let r = &k * &model(family, cert, &w, p)?;
        residuals.push(rel_residual(&r, &l));
    }
    let tol = tolerance(p);
    let passed = max_ok(&residuals, &tol);
    Ok(Pass { precision: p, constant: Some(k), residuals, tolerance: tol, passed })
}

pub struct Fitted {
    pub c: BigComplex,
    pub c_prime: BigComplex,
    pub c_check: BigComplex,
}

/// C, C' and C-check from one sample; used when a certificate is built.
pub fn fit_constants(lam: &HyperData, v: &[Rational], v_prime: &[Rational], v_check: &[Rational], precision: usize) -> Result<Fitted> {
    let p = precision;
    let (pp, r) = (lam.p, lam.r);
    let u: Vec<Rational> = (0..r).map(|i| rat(i, r)).collect();
    let uc: Vec<Rational> = (0..r - pp).map(|i| rat(i, r - pp)).collect();
    let mut offs: Vec<Rational> = u.clone();
    offs.extend(v.iter().cloned());
    offs.extend(v_check.iter().cloned());
    let w0 = c(&default_samples(&offs, DEFAULT_SEED)[0], p);
    let ratio = |f: BigComplex, q: BigComplex| &f / &q;
    Ok(Fitted {
        c: ratio(f_val(&w0, lam, p)?, gamma_ratio(&w0, &u, v, p)?),
        c_prime: ratio(f_val(&w0, &dual(lam), p)?, gamma_ratio(&w0, &u, v_prime, p)?),
        c_check: ratio(f_val(&w0, &reciprocal(lam)?, p)?, gamma_ratio(&w0, &uc, v_check, p)?),
    })
}

/// One report per identity family; constants are fixed from samples[0].
pub fn verify_gpf(cert: &GpfCertificate, samples: &[Rational], precision: usize) -> Result<Vec<VerificationReport>> {
    if samples.len() < 2 {
        return Err(Error::Precondition("verification needs at least two samples".into()));
    }
    Family::ALL
        .par_iter()
        .map(|&fam| {
            let (main, doubled) = rayon::join(|| fit_and_check(fam, cert, samples, precision), || fit_and_check(fam, cert, samples, 2 * precision));
            Ok(VerificationReport::from_passes(fam.tag(), samples.to_vec(), main?, Some(doubled?)))
        })
        .collect()
}

/// Agreement of the two routes to g and to h.
pub fn verify_routes(lam: &HyperData, samples: &[Rational], precision: usize) -> Result<Vec<VerificationReport>> {
    type Route = fn(&BigComplex, &HyperData, usize) -> Result<BigComplex>;
    let pairs: [(&str, Route, Route); 2] = [("g-routes", g_val, g_val_dual), ("h-routes", h_val, h_val_reciprocal)];
    let mut out = Vec::new();
    for (tag, a, b) in pairs {
        let run = |p: usize| -> Result<Pass> {
            let mut residuals = Vec::new();
            for w in samples {
                let w = c(w, p);
                residuals.push(rel_residual(&a(&w, lam, p)?, &b(&w, lam, p)?));
            }
            let tol = tolerance(p);
            let passed = max_ok(&residuals, &tol);
            Ok(Pass { precision: p, constant: None, residuals, tolerance: tol, passed })
        };
        out.push({
            let (m, d) = rayon::join(|| run(precision), || run(2 * precision));
            VerificationReport::from_passes(tag, samples.to_vec(), m?, Some(d?))
        });
    }
    Ok(out)
}

/// A w-free rational function of x evaluated at a real x.
fn eval_in_x(f: &WxRatFunc, x: &Real) -> Result<Real> {
    let num = f.numerator().coeff(0);
    let horner = |poly: &UniPoly| {
        let p = x.prec();
        let mut acc = Real::zero(p);
        for q in poly.coeffs().iter().rev() {
            acc = &(&acc * x) + &Real::from_rational(q, p);
        }
        acc
    };
    let den = horner(&f.den_x_poly());
    if den.is_zero() {
        return Err(Error::Numeric("x-denominator vanishes".into()));
    }
    Ok(&horner(&num) / &den)
}

/// f(w + 1) = R f(w) + Q f~(w), f~ the (1, 1, 1)-shift; for certified data
/// also the two-term ratio f(w+1)/f(w) = prod(w + i/r)/prod(w + v_i).
pub fn verify_three_term(lam: &HyperData, cert: Option<&GpfCertificate>, samples: &[Rational], precision: usize) -> Result<Vec<VerificationReport>> {
    let a = A_of_lambda(lam)?;
    let (rr, qq) = extract_RQ(&a);
    let run = |p: usize| -> Result<Pass> {
        let x = x_real(&lam.x, p);
        let mut residuals = Vec::new();
        for w in samples {
            let wc = c(w, p);
            let lhs = f_val(&(&wc + &BigComplex::one(p)), lam, p)?;
            let r = eval_in_x(&rr.eval_w(w)?, &x)?;
            let q = eval_in_x(&qq.eval_w(w)?, &x)?;
            let f0 = f_val(&wc, lam, p)?;
            let ft = f_tilde(&wc, lam, p)?;
            let rhs = &(&BigComplex::real(r) * &f0) + &(&BigComplex::real(q) * &ft);
            residuals.push(rel_residual(&rhs, &lhs));
        }
        let tol = tolerance(p);
        let passed = max_ok(&residuals, &tol);
        Ok(Pass { precision: p, constant: None, residuals, tolerance: tol, passed })
    };
    let mut out = vec![{
            let (m, d) = rayon::join(|| run(precision), || run(2 * precision));
            VerificationReport::from_passes("ttr2", samples.to_vec(), m?, Some(d?))
        }];
    if let Some(cert) = cert {
        let two_term = |p: usize| -> Result<Pass> {
            let mut residuals = Vec::new();
            for w in samples {
                let wc = c(w, p);
                let ratio = &f_val(&(&wc + &BigComplex::one(p)), lam, p)? / &f_val(&wc, lam, p)?;
                let mut expect = Rational::one();
                for u in cert.u() {
                    expect *= w + u;
                }
                for v in &cert.v {
                    expect /= w + v;
                }
                residuals.push(rel_residual(&BigComplex::from_rational(&expect, p), &ratio));
            }
            let tol = tolerance(p);
            let sums_ok = cert.u().iter().sum::<Rational>() == cert.v.iter().sum::<Rational>() && cert.u().len() == cert.v.len();
            let passed = sums_ok && max_ok(&residuals, &tol);
            Ok(Pass { precision: p, constant: None, residuals, tolerance: tol, passed })
        };
        out.push({
            let (m, d) = rayon::join(|| two_term(precision), || two_term(2 * precision));
            VerificationReport::from_passes("two-term", samples.to_vec(), m?, Some(d?))
        });
    }
    Ok(out)
}

/// f~(w) = 2F1(pw + a + 1, qw + b + 1; rw + 1; x).
pub fn f_tilde(w: &BigComplex, lam: &HyperData, precision: usize) -> Result<BigComplex> {
    let p = precision;
    let (a, b, g) = params(w, lam, p);
    let one = BigComplex::one(p);
    hyp2f1(&(&a + &one), &(&b + &one), &(&g + &one), &lift(&x_real(&lam.x, p), p), p)
}

/// Every check behind `verify`: the five product formulas, both g and h
/// routes, and the three-term relation.
pub fn verify_certificate(cert: &GpfCertificate, precision: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let samples = default_samples(&sensitive_offsets(cert), seed);
    let ((stored, gpf), (routes, ttr)) = rayon::join(
        || rayon::join(|| verify_stored_data(cert, precision), || verify_gpf(cert, &samples, precision)),
        || rayon::join(|| verify_routes(&cert.lambda, &samples, precision), || verify_three_term(&cert.lambda, Some(cert), &samples, precision)),
    );
    let gpf = gpf?;
    let mut out = vec![stored?, verify_stored_constants(cert, &gpf, precision)?];
    out.extend(gpf);
    out.extend(routes?);
    out.extend(ttr?);
    Ok(out)
}

fn flag_pass(p: usize, bad: &[&str]) -> Pass {
    Pass {
        precision: p,
        constant: None,
        residuals: vec![Real::from_i64(bad.len() as i64, p)],
        tolerance: Real::from_rational(&rat(1, 2), p),
        passed: bad.is_empty(),
    }
}

/// Exact fields of the certificate against a fresh derivation from lambda.
pub fn verify_stored_data(cert: &GpfCertificate, precision: usize) -> Result<VerificationReport> {
    let lam = &cert.lambda;
    let mut bad = Vec::new();
    match assemble_v(lam) {
        Ok((v, v_star)) => {
            if v != cert.v {
                bad.push("v");
            }
            if v_star != cert.v_star {
                bad.push("v*");
            }
        }
        Err(_) => bad.push("v (lambda admits no formula)"),
    }
    if check_structure(lam, &cert.v, &cert.v_star, &cert.v_prime).is_err() {
        bad.push("structure");
    }
    if dual_v(&cert.v_star, lam.r) != cert.v_prime {
        bad.push("v'");
    }
    if reciprocal_v(&cert.v, lam).ok().as_ref() != Some(&cert.v_check) {
        bad.push("v-check");
    }
    if cert.v.iter().sum::<Rational>() != cert.sum_check {
        bad.push("sum");
    }
    if delta(lam.p, lam.r) != cert.delta {
        bad.push("delta");
    }
    if cert.s * lam.p != lam.r || cert.j + cert.j_prime != cert.s - 2 || lam.a != rat(cert.j, cert.s) {
        bad.push("indices");
    }
    if cert.parity != lam.p * (cert.s - 1) {
        bad.push("parity");
    }
    let mut rep = VerificationReport::from_passes("stored-data", vec![], flag_pass(precision, &bad), None);
    if !bad.is_empty() {
        rep.note = Some(format!("mismatch in {}", bad.join(", ")));
    }
    Ok(rep)
}

/// Stored decimal constants against the ones refitted in `gpf`.
pub fn verify_stored_constants(cert: &GpfCertificate, gpf: &[VerificationReport], precision: usize) -> Result<VerificationReport> {
    let p = precision;
    let k = &cert.constants;
    let fitted = |tag: &str| gpf.iter().find(|r| r.identity == tag).and_then(|r| r.main.constant.clone());
    let mut residuals = Vec::new();
    let mut bits = p;
    for (stored, tag) in [(&k.c, "gpf1"), (&k.c_prime, "gpf2"), (&k.c_check, "gpf-r")] {
        let value = BigComplex::from_rational(&parse_decimal(&stored.value)?, p);
        let f = fitted(tag).ok_or_else(|| Error::Invariant(format!("no fitted constant for {tag}")))?;
        residuals.push(rel_residual(&value, &f));
        bits = bits.min(stored.precision_bits);
    }
    let d = parse_decimal(&k.delta.value)?;
    residuals.push(rel_residual(&BigComplex::from_rational(&d, p), &BigComplex::from_rational(&cert.delta, p)));
    bits = bits.min(k.delta.precision_bits);
    let tol = tolerance(bits.max(64));
    let passed = max_ok(&residuals, &tol);
    let main = Pass { precision: p, constant: None, residuals, tolerance: tol, passed };
    Ok(VerificationReport::from_passes("constants", vec![], main, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arguments::x_of_s;
    use crate::certify::{certify, gpf_multiple, Outcome};

    const P: usize = 256;

    fn cert(p: i64, r: i64, a: Rational) -> GpfCertificate {
        match certify(p, r, &a, P).unwrap() {
            Outcome::Certified(c) => *c,
            Outcome::Refused(why) => panic!("refused: {why}"),
        }
    }

    fn agree(a: &Real, b: &Real, digits: usize) -> bool {
        let d = (a - b).abs();
        d < Real::from_i64(10, P).powr(&Real::from_i64(-(digits as i64), P))
    }

    fn sqrt(q: i64) -> Real {
        Real::from_i64(q, P).sqrt()
    }

    #[test]
    fn f_definition() {
        let lam = HyperData::boundary(1, 3, int(0), AlgebraicReal::from_rational(rat(3, 4)));
        let w = BigComplex::one(P);
        let direct = hyp2f1(&c(&int(1), P), &c(&rat(1, 2), P), &c(&int(3), P), &c(&rat(3, 4), P), P).unwrap();
        assert!(rel_residual(&f_val(&w, &lam, P).unwrap(), &direct).is_zero());
    }

    #[test]
    fn rational_constants() {
        let first = cert(1, 3, int(0));
        // C = 2/sqrt 3
        let two_over = &Real::from_i64(2, P) / &sqrt(3);
        let fit = fit_constants(&first.lambda, &first.v, &first.v_prime, &first.v_check, P).unwrap();
        assert!(agree(&fit.c.re, &two_over, 40));
        // reciprocal: 2 sqrt 2 / 3
        let rc = &sqrt(2).scale(2) / &Real::from_i64(3, P);
        assert!(agree(&fit.c_check.re, &rc, 40));
        assert!(first.constants.c.value.starts_with("1.1547005383792515290182975610039149112952"));
    }

    #[test]
    fn irrational_constants() {
        let second = cert(2, 4, int(0));
        let fit = fit_constants(&second.lambda, &second.v, &second.v_prime, &second.v_check, P).unwrap();
        let s = &Real::from_i64(2, P) - &sqrt(2);
        // C = 1/sqrt(2 - sqrt 2) and C-check = 1/sqrt(2(2 - sqrt 2))
        assert!(agree(&fit.c.re, &s.sqrt().recip(), 40));
        assert!(agree(&fit.c_check.re, &s.scale(2).sqrt().recip(), 40));
    }

    #[test]
    fn product_formulas_hold() {
        for c in [cert(1, 3, int(0)), cert(1, 3, rat(1, 3)), cert(2, 4, int(0))] {
            let reports = verify_certificate(&c, P, DEFAULT_SEED).unwrap();
            assert_eq!(reports.len(), 11);
            for r in &reports {
                assert!(r.verdict, "{} failed for {}: {:?}", r.identity, c.lambda, r.worst());
                assert!(r.samples.is_empty() || r.samples.len() >= 13);
                let bound = Real::from_i64(10, P).powr(&Real::from_i64(-30, P));
                assert!(r.main.residuals.iter().all(|x| x < &bound));
            }
        }
    }

    #[test]
    fn tampered_v_fails() {
        let mut c = cert(1, 3, int(0));
        c.v = vec![int(0), rat(1, 3), rat(1, 2)];
        let samples = default_samples(&sensitive_offsets(&c), DEFAULT_SEED);
        let reports = verify_gpf(&c, &samples, P).unwrap();
        let gpf1 = reports.iter().find(|r| r.identity == "gpf1").unwrap();
        assert!(!gpf1.verdict);
        assert!(gpf1.worst().unwrap().1 > Real::from_f64(1e-6, P));
    }

    #[test]
    fn tampered_fields_fail() {
        let base = cert(1, 3, int(0));
        let stored = |c: &GpfCertificate| verify_stored_data(c, P).unwrap().verdict;
        assert!(stored(&base));
        let mut t = base.clone();
        t.v_check = vec![rat(1, 4), rat(1, 3)];
        assert!(!stored(&t));
        let mut t = base.clone();
        t.delta = rat(1, 7);
        assert!(!stored(&t));

        let samples = default_samples(&sensitive_offsets(&base), DEFAULT_SEED);
        let gpf = verify_gpf(&base, &samples, P).unwrap();
        assert!(verify_stored_constants(&base, &gpf, P).unwrap().verdict);
        let mut t = base.clone();
        t.constants.c.value = "1.1547005383".into();
        assert!(!verify_stored_constants(&t, &gpf, P).unwrap().verdict);
    }

    #[test]
    fn h_product_needs_the_j0_factor() {
        // dropping Gamma(w + c) from the h-product breaks the identity
        let base = cert(1, 3, int(0));
        let samples = default_samples(&sensitive_offsets(&base), DEFAULT_SEED);
        let lam = base.lambda.clone();
        let (num, den) = h_offsets(&base);
        let side = |w: &BigComplex, num: &[Rational]| {
            let d = BigComplex::from_rational(&base.delta, P).pow(w);
            &d * &gamma_ratio(w, num, &den, P).unwrap()
        };
        let run = |num: &[Rational]| {
            let w0 = c(&samples[0], P);
            let k = &h_val(&w0, &lam, P).unwrap() / &side(&w0, num);
            let w = c(&samples[3], P);
            rel_residual(&(&k * &side(&w, num)), &h_val(&w, &lam, P).unwrap())
        };
        assert!(run(&num) < tolerance(P));
        assert!(run(&num[1..]) > Real::from_f64(1e-6, P));
    }

    #[test]
    fn routes_at_named_points() {
        let lam = HyperData::boundary(1, 3, int(0), AlgebraicReal::from_rational(rat(3, 4)));
        let w = c(&rat(2, 5), P);
        let tol = Real::from_f64(1e-30, P);
        assert!(rel_residual(&g_val(&w, &lam, P).unwrap(), &g_val_dual(&w, &lam, P).unwrap()) < tol);
        let two = HyperData::boundary(2, 4, int(0), x_of_s(2).unwrap());
        let w = c(&rat(3, 5), P);
        assert!(rel_residual(&h_val(&w, &two, P).unwrap(), &h_val_reciprocal(&w, &two, P).unwrap()) < tol);
    }

    #[test]
    fn three_term_for_non_solution() {
        let lam = HyperData::boundary(1, 2, int(0), AlgebraicReal::from_rational(rat(1, 2)));
        let reports = verify_three_term(&lam, None, &[rat(7, 10), rat(13, 10)], P).unwrap();
        assert!(reports[0].verdict);
        let (_, q) = extract_RQ(&A_of_lambda(&lam).unwrap());
        assert!(!q.is_zero());
        let sol = HyperData::boundary(1, 3, int(0), AlgebraicReal::from_rational(rat(3, 4)));
        let reports = verify_three_term(&sol, None, &[rat(7, 10)], P).unwrap();
        assert!(reports[0].verdict);
    }

    #[test]
    fn multiple_matches_scaled_argument() {
        let base = cert(1, 3, int(0));
        let twice = gpf_multiple(&base, 2).unwrap();
        assert!(!twice.primitive);
        let w = c(&rat(3, 10), P);
        let lhs = f_val(&w, &twice.lambda, P).unwrap();
        let rhs = f_val(&w.scale(&Real::from_i64(2, P)), &base.lambda, P).unwrap();
        assert!(rel_residual(&lhs, &rhs) < Real::from_f64(1e-30, P));
        // the constant survives the multiplication formula
        assert_eq!(twice.constants.c.value[..45], base.constants.c.value[..45]);
    }

    #[test]
    fn samples_avoid_poles() {
        let base = cert(2, 4, int(0));
        let offs = sensitive_offsets(&base);
        let eps = pole_threshold(&offs);
        let s = default_samples(&offs, 1);
        assert_eq!(s.len(), 15);
        assert!(s.iter().all(|w| !near_pole(w, &offs, eps)));
        assert_eq!(s, default_samples(&offs, 1));
    }
}

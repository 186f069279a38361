//! JSON shapes. Integers are decimal strings, rationals {"num","den"},
//! multisets sorted ascending.

use gpf_core::arguments::{DegreeReport, NegativeRoot, RootReport};
use gpf_core::certify::assemble::{Constant, Constants};
use gpf_core::certify::{dual, reciprocal, GpfCertificate};
use gpf_core::exact::{parse_rational, AlgebraicReal, Interval, Rational, UniPoly};
use gpf_core::numeric::verify::{x_real, Pass, VerificationReport};
use gpf_core::{Error, HyperData, Result};
use serde::{Deserialize, Serialize};

const APPROX_DIGITS: usize = 50;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WRational {
    pub num: String,
    pub den: String,
}

impl WRational {
    pub fn from_core(q: &Rational) -> Self {
        WRational { num: q.numer().to_string(), den: q.denom().to_string() }
    }

    pub fn to_core(&self) -> Result<Rational> {
        parse_rational(&format!("{}/{}", self.num, self.den))
    }
}

fn rationals(v: &[Rational]) -> Vec<WRational> {
    v.iter().map(WRational::from_core).collect()
}

fn core_rationals(v: &[WRational]) -> Result<Vec<Rational>> {
    v.iter().map(WRational::to_core).collect()
}

fn int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("malformed integer {s:?}")))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WInterval {
    pub lo: WRational,
    pub hi: WRational,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WAlgebraic {
    /// Integer coefficients, constant term first.
    pub min_poly: Vec<String>,
    pub interval: WInterval,
    pub approx: String,
}

impl WAlgebraic {
    pub fn from_core(x: &AlgebraicReal) -> Self {
        let iv = x.interval();
        WAlgebraic {
            min_poly: x.defining().primitive_integer().iter().map(|c| c.to_string()).collect(),
            interval: WInterval { lo: WRational::from_core(&iv.lo), hi: WRational::from_core(&iv.hi) },
            approx: x_real(x, 200).to_decimal(APPROX_DIGITS),
        }
    }

    pub fn to_core(&self) -> Result<AlgebraicReal> {
        let coeffs = self.min_poly.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        let iv = Interval::new(self.interval.lo.to_core()?, self.interval.hi.to_core()?);
        AlgebraicReal::from_parts(UniPoly::new(coeffs), iv)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WData {
    pub p: String,
    pub q: String,
    pub r: String,
    pub a: WRational,
    pub b: WRational,
    pub x: WAlgebraic,
}

impl WData {
    pub fn from_core(l: &HyperData) -> Self {
        WData {
            p: l.p.to_string(),
            q: l.q.to_string(),
            r: l.r.to_string(),
            a: WRational::from_core(&l.a),
            b: WRational::from_core(&l.b),
            x: WAlgebraic::from_core(&l.x),
        }
    }

    pub fn to_core(&self) -> Result<HyperData> {
        Ok(HyperData::new(int(&self.p)?, int(&self.q)?, int(&self.r)?, self.a.to_core()?, self.b.to_core()?, self.x.to_core()?))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WConstant {
    pub value: String,
    pub precision_bits: usize,
}

impl WConstant {
    fn from_core(c: &Constant) -> Self {
        WConstant { value: c.value.clone(), precision_bits: c.precision_bits }
    }

    fn to_core(&self) -> Constant {
        Constant { value: self.value.clone(), precision_bits: self.precision_bits }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WConstants {
    #[serde(rename = "C")]
    pub c: WConstant,
    #[serde(rename = "C_prime")]
    pub c_prime: WConstant,
    #[serde(rename = "C_check")]
    pub c_check: WConstant,
    pub delta: WConstant,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WMultiple {
    pub k: String,
    pub primitive_p: String,
}

/// Gamma-quotient layouts of the three product formulas, for reading only.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WFormulas {
    pub f: String,
    pub f_dual: String,
    pub f_reciprocal: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WCertificate {
    pub lambda: WData,
    pub dual: WData,
    pub reciprocal: WData,
    pub s: String,
    pub j: String,
    pub j_prime: String,
    pub parity: String,
    pub v: Vec<WRational>,
    pub v_star: Vec<WRational>,
    pub v_prime: Vec<WRational>,
    pub v_check: Vec<WRational>,
    pub sum_check: WRational,
    pub delta: WRational,
    pub constants: WConstants,
    pub primitive: bool,
    pub multiple_of: Option<WMultiple>,
    pub formulas: WFormulas,
}

pub fn formulas(c: &GpfCertificate) -> WFormulas {
    use gpf_core::certify::assemble::format_gamma_quotient as fq;
    use gpf_core::certify::gamma_quotient as gq;
    let show = |num: Vec<Rational>, den: &[Rational]| {
        let (n, d) = gq(&num, den);
        fq(&n, &d)
    };
    WFormulas {
        f: show(c.u(), &c.v),
        f_dual: show(c.u(), &c.v_prime),
        f_reciprocal: show(c.u_check(), &c.v_check),
    }
}

impl WCertificate {
    pub fn from_core(c: &GpfCertificate) -> Result<Self> {
        let k = &c.constants;
        Ok(WCertificate {
            lambda: WData::from_core(&c.lambda),
            dual: WData::from_core(&dual(&c.lambda)),
            reciprocal: WData::from_core(&reciprocal(&c.lambda)?),
            s: c.s.to_string(),
            j: c.j.to_string(),
            j_prime: c.j_prime.to_string(),
            parity: c.parity.to_string(),
            v: rationals(&c.v),
            v_star: rationals(&c.v_star),
            v_prime: rationals(&c.v_prime),
            v_check: rationals(&c.v_check),
            sum_check: WRational::from_core(&c.sum_check),
            delta: WRational::from_core(&c.delta),
            constants: WConstants {
                c: WConstant::from_core(&k.c),
                c_prime: WConstant::from_core(&k.c_prime),
                c_check: WConstant::from_core(&k.c_check),
                delta: WConstant::from_core(&k.delta),
            },
            primitive: c.primitive,
            multiple_of: c.multiple_of.map(|(k, p0)| WMultiple { k: k.to_string(), primitive_p: p0.to_string() }),
            formulas: formulas(c),
        })
    }

    /// The certificate as written; nothing is recomputed, so a tampered
    /// file is verified as-is.
    pub fn to_core(&self) -> Result<GpfCertificate> {
        let k = &self.constants;
        let multiple_of = match &self.multiple_of {
            Some(m) => Some((int(&m.k)?, int(&m.primitive_p)?)),
            None => None,
        };
        Ok(GpfCertificate {
            lambda: self.lambda.to_core()?,
            s: int(&self.s)?,
            j: int(&self.j)?,
            j_prime: int(&self.j_prime)?,
            parity: int(&self.parity)?,
            v: core_rationals(&self.v)?,
            v_star: core_rationals(&self.v_star)?,
            v_prime: core_rationals(&self.v_prime)?,
            v_check: core_rationals(&self.v_check)?,
            sum_check: self.sum_check.to_core()?,
            delta: self.delta.to_core()?,
            constants: Constants { c: k.c.to_core(), c_prime: k.c_prime.to_core(), c_check: k.c_check.to_core(), delta: k.delta.to_core() },
            primitive: self.primitive,
            multiple_of,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WConfig {
    pub command: String,
    pub precision_bits: usize,
    pub seed: String,
    #[serde(default)]
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s_max: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p_max: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<WRational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub file: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WSearch {
    pub config: WConfig,
    pub count: usize,
    pub primitive_count: usize,
    pub certificates: Vec<WCertificate>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WCertify {
    pub config: WConfig,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<WCertificate>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WPass {
    pub precision_bits: usize,
    pub tolerance: String,
    pub residuals: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constant: Option<String>,
    pub passed: bool,
}

const RESIDUAL_DIGITS: usize = 6;

impl WPass {
    fn from_core(p: &Pass) -> Self {
        WPass {
            precision_bits: p.precision,
            tolerance: p.tolerance.to_sci(RESIDUAL_DIGITS),
            residuals: p.residuals.iter().map(|r| r.to_sci(RESIDUAL_DIGITS)).collect(),
            constant: p.constant.as_ref().map(|c| {
                let digits = gpf_core::numeric::verify::digits(p.precision);
                if c.im.is_zero() {
                    c.re.to_decimal(digits)
                } else {
                    format!("{} + {}i", c.re.to_decimal(digits), c.im.to_decimal(digits))
                }
            }),
            passed: p.passed,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WReport {
    pub identity: String,
    pub samples: Vec<WRational>,
    pub main: WPass,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub doubled: Option<WPass>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub worst_sample: Option<WRational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl WReport {
    pub fn from_core(r: &VerificationReport) -> Self {
        WReport {
            identity: r.identity.clone(),
            samples: rationals(&r.samples),
            main: WPass::from_core(&r.main),
            doubled: r.doubled.as_ref().map(WPass::from_core),
            verdict: if r.verdict { "pass" } else { "fail" }.into(),
            worst_sample: (!r.verdict).then(|| r.worst().map(|(w, _)| WRational::from_core(&w))).flatten(),
            note: r.note.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WVerified {
    pub lambda: WData,
    pub reports: Vec<WReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WVerify {
    pub config: WConfig,
    pub certificates: Vec<WVerified>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WPair {
    pub j: String,
    pub theta: String,
    pub modulus: String,
    pub rho: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WRoots {
    pub s: String,
    pub precision_bits: usize,
    pub positive_root: WAlgebraic,
    /// "simple" with its value and c(s), or "double" at 1 - s.
    pub negative_root_kind: String,
    pub negative_root: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<String>,
    pub complex_pairs: Vec<WPair>,
    pub census: String,
    pub checks: Vec<WCheck>,
}

const ROOT_DIGITS: usize = 30;

impl WRoots {
    pub fn from_core(r: &RootReport) -> Self {
        let (kind, value, c) = match &r.negative_root {
            NegativeRoot::Simple { root, c } => ("simple", x_real(root, r.precision).to_decimal(ROOT_DIGITS), Some(c.to_decimal(ROOT_DIGITS))),
            NegativeRoot::Double(v) => ("double", v.to_string(), None),
        };
        WRoots {
            s: r.s.to_string(),
            precision_bits: r.precision,
            positive_root: WAlgebraic::from_core(&r.positive_root),
            negative_root_kind: kind.into(),
            negative_root: value,
            c,
            complex_pairs: r
                .complex_pairs
                .iter()
                .map(|p| WPair {
                    j: p.j.to_string(),
                    theta: p.theta.to_decimal(ROOT_DIGITS),
                    modulus: p.r.to_decimal(ROOT_DIGITS),
                    rho: p.rho.to_decimal(ROOT_DIGITS),
                })
                .collect(),
            census: r.census.to_string(),
            checks: r.checks.iter().map(|c| WCheck { name: c.name.clone(), passed: c.passed }).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WInvariants {
    #[serde(rename = "M")]
    pub m: String,
    #[serde(rename = "N")]
    pub n_norm: String,
    pub n: String,
    pub d: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WDegree {
    pub s: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p_s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<WInterval>,
    pub factor_degrees: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<WInvariants>,
}

impl WDegree {
    pub fn from_core(d: &DegreeReport) -> Self {
        WDegree {
            s: d.s.to_string(),
            p_s: d.p_s.map(|p| p.to_string()),
            delta: d.delta.as_ref().map(|(lo, hi)| WInterval { lo: WRational::from_core(lo), hi: WRational::from_core(hi) }),
            factor_degrees: d.factor_degrees.iter().map(|k| k.to_string()).collect(),
            irreducible: d.irreducible,
            invariants: d.invariants.as_ref().map(|i| WInvariants {
                m: i.m.to_string(),
                n_norm: i.n_norm.to_string(),
                n: i.n.to_string(),
                d: i.d.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WRootsOutput {
    pub config: WConfig,
    pub roots: WRoots,
    pub degree: WDegree,
    pub passed: bool,
}

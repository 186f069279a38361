//! Three-valued irreducibility test over Q: rational roots, repeated
//! factors, and factor-degree patterns modulo small primes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{poly_gcd, UniPoly};
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// `patterns` lists (prime, factor degrees mod prime) used as the certificate.
    Irreducible { patterns: Vec<(u64, Vec<usize>)> },
    Composite { factor: UniPoly },
    Unknown,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }
}

const MIN_PRIMES: usize = 3;
const MAX_PRIMES_TRIED: usize = 300;
const MAX_ROOT_CANDIDATES: usize = 20_000;
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

pub fn irreducibility_certify(f: &UniPoly) -> Irreducibility {
    let coeffs = f.primitive_integer();
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Irreducibility::Unknown;
    }
    if n == 1 {
        return Irreducibility::Irreducible { patterns: Vec::new() };
    }
    let f = f.primitive();
    if coeffs[0].is_zero() {
        return Irreducibility::Composite { factor: UniPoly::z() };
    }
    let g = poly_gcd(&f, &f.derivative());
    if g.degree().unwrap_or(0) > 0 {
        return Irreducibility::Composite { factor: g.primitive() };
    }
    let roots = rational_root_candidates(&coeffs[n], &coeffs[0]);
    if let Some(cands) = &roots {
        for q in cands {
            if f.eval(q).is_zero() {
                return Irreducibility::Composite { factor: UniPoly::linear_root(q).primitive() };
            }
        }
        if n <= 3 {
            return Irreducibility::Irreducible { patterns: Vec::new() };
        }
    }
    modular_patterns(&coeffs)
}

fn modular_patterns(coeffs: &[BigInt]) -> Irreducibility {
    let n = coeffs.len() - 1;
    let mut possible: BTreeSet<usize> = (1..n).collect();
    let mut used = Vec::new();
    for p in primes().take(MAX_PRIMES_TRIED) {
        let fp: Vec<u64> = coeffs.iter().map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect();
        if fp[n] == 0 {
            continue;
        }
        let fp = fp_monic(&fp_trim(fp), p);
        let d = fp_derivative(&fp, p);
        if fp_gcd(&fp, &d, p).len() != 1 {
            continue;
        }
        let degs = ddf(&fp, p);
        let sums = subset_sums(&degs);
        possible.retain(|k| sums.contains(k));
        used.push((p, degs));
        if possible.is_empty() && used.len() >= MIN_PRIMES {
            return Irreducibility::Irreducible { patterns: used };
        }
    }
    Irreducibility::Unknown
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0usize]);
    for &d in degs {
        let next: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(next);
    }
    s
}

fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Candidates +-d/e ordered by |value|, positive first; None when the
/// divisor lists are too large or cannot be computed by trial division.
fn rational_root_candidates(lead: &BigInt, constant: &BigInt) -> Option<Vec<Rational>> {
    let dn = divisors(&constant.abs())?;
    let dd = divisors(&lead.abs())?;
    if dn.len() * dd.len() > MAX_ROOT_CANDIDATES {
        return None;
    }
    let mut set = BTreeSet::new();
    for a in &dn {
        for b in &dd {
            set.insert(Rational::new(a.clone(), b.clone()));
        }
    }
    let mut out = Vec::with_capacity(2 * set.len());
    for q in set {
        out.push(q.clone());
        out.push(-q);
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.clone();
    let mut fac: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= m {
        if d > TRIAL_DIVISION_LIMIT {
            return None;
        }
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            e += 1;
        }
        if e > 0 {
            fac.push((bd, e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        fac.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::new();
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= &p;
            }
        }
        out = next;
        if out.len() > MAX_ROOT_CANDIDATES {
            return None;
        }
    }
    out.sort();
    Some(out)
}

// --- arithmetic in F_p[z], coefficients lowest first ---

fn fp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn fp_monic(f: &[u64], p: u64) -> Vec<u64> {
    let i = inv(*f.last().unwrap(), p);
    f.iter().map(|&c| mulm(c, i, p)).collect()
}

fn fp_derivative(f: &[u64], p: u64) -> Vec<u64> {
    fp_trim(f.iter().enumerate().skip(1).map(|(i, &c)| mulm(c, i as u64 % p, p)).collect())
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mulm(x, y, p)) % p;
        }
    }
    fp_trim(v)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let il = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], il, p);
        q[k] = c;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + p - mulm(c, bc, p)) % p;
            }
        }
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            r = fp_divrem(&fp_mul(&r, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    r
}

/// Distinct-degree factorization of a monic squarefree polynomial; returns
/// the degree of every irreducible factor.
fn ddf(f: &[u64], p: u64) -> Vec<usize> {
    let mut f = f.to_vec();
    let mut degs = Vec::new();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut i = 1;
    while 2 * i < f.len() {
        h = fp_powmod(&h, p, &f, p);
        let g = fp_gcd(&f, &fp_sub(&h, &x, p), p);
        let dg = g.len() - 1;
        if dg > 0 {
            degs.extend(std::iter::repeat(i).take(dg / i));
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
        }
        i += 1;
    }
    if f.len() > 1 {
        degs.push(f.len() - 1);
    }
    degs.sort_unstable();
    degs
}

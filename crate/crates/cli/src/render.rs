//! Plain-text layouts of the JSON reports.

use std::fmt::Write;

use crate::wire::*;

fn q(r: &WRational) -> String {
    if r.den == "1" {
        r.num.clone()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

fn set(v: &[WRational]) -> String {
    format!("{{{}}}", v.iter().map(q).collect::<Vec<_>>().join(", "))
}

fn data(d: &WData) -> String {
    let x = if d.x.interval.lo == d.x.interval.hi { q(&d.x.interval.lo) } else { format!("{}...", &d.x.approx[..d.x.approx.len().min(14)]) };
    format!("({}, {}, {}; {}, {}; {})", d.p, d.q, d.r, q(&d.a), q(&d.b), x)
}

fn approx(r: &WRational) -> f64 {
    let n: f64 = r.num.parse().unwrap_or(f64::NAN);
    let d: f64 = r.den.parse().unwrap_or(f64::NAN);
    n / d
}

fn short(c: &WConstant) -> String {
    c.value.chars().take(42).collect()
}

pub fn certificate(c: &WCertificate) -> String {
    let mut s = String::new();
    let tag = match &c.multiple_of {
        None => "primitive".to_string(),
        Some(m) => format!("{} x primitive with p = {}", m.k, m.primitive_p),
    };
    let _ = writeln!(s, "lambda = {}   s = {}, j = {}, j' = {}, {}", data(&c.lambda), c.s, c.j, c.j_prime, tag);
    if c.lambda.x.interval.lo != c.lambda.x.interval.hi {
        let _ = writeln!(s, "  x root of [{}] (constant term first), x = {}", c.lambda.x.min_poly.join(", "), c.lambda.x.approx);
    }
    let _ = writeln!(s, "  f(w; lambda)  = C  * {}", c.formulas.f);
    let _ = writeln!(s, "  f(w; lambda') = C' * {}   lambda' = {}", c.formulas.f_dual, data(&c.dual));
    let _ = writeln!(s, "  f(w; recip)   = C^ * {}   recip = {}", c.formulas.f_reciprocal, data(&c.reciprocal));
    let _ = writeln!(s, "  v = {}   v* = {}   v' = {}   v^ = {}", set(&c.v), set(&c.v_star), set(&c.v_prime), set(&c.v_check));
    let _ = writeln!(s, "  sum v = {}   delta = {}", q(&c.sum_check), q(&c.delta));
    let k = &c.constants;
    let _ = writeln!(s, "  C = {}   C' = {}   C^ = {}", short(&k.c), short(&k.c_prime), short(&k.c_check));
    s
}

pub fn search(out: &WSearch) -> String {
    let mut s = format!(
        "search s <= {}, p <= {}: {} solutions, {} primitive\n",
        out.config.s_max.as_deref().unwrap_or("?"),
        out.config.p_max.as_deref().unwrap_or("?"),
        out.count,
        out.primitive_count
    );
    for c in &out.certificates {
        s.push_str(&certificate(c));
    }
    s
}

pub fn certify(out: &WCertify) -> String {
    match (&out.certificate, &out.reason) {
        (Some(c), _) => certificate(c),
        (None, Some(r)) => format!("refused: {r}\n"),
        (None, None) => "refused\n".into(),
    }
}

pub fn verify(out: &WVerify) -> String {
    let mut s = String::new();
    for c in &out.certificates {
        let _ = writeln!(s, "lambda = {}", data(&c.lambda));
        for r in &c.reports {
            let worst = r.main.residuals.iter().map(|x| x.parse::<f64>().unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
            let _ = write!(s, "  {:<11} {}  max residual {:.3e} (tol {})", r.identity, r.verdict, worst, r.main.tolerance);
            if let Some(k) = &r.main.constant {
                let _ = write!(s, "  constant {}", k.chars().take(42).collect::<String>());
            }
            if let Some(n) = &r.note {
                let _ = write!(s, "  ({n})");
            }
            s.push('\n');
        }
    }
    let _ = writeln!(s, "{}", if out.passed { "all identities pass" } else { "FAILED" });
    s
}

pub fn roots(out: &WRootsOutput) -> String {
    let r = &out.roots;
    let mut s = String::new();
    let _ = writeln!(s, "s = {}: {} roots with multiplicity", r.s, r.census);
    let _ = writeln!(s, "  positive root {}", r.positive_root.approx);
    let _ = writeln!(s, "  negative root {} ({})", r.negative_root, r.negative_root_kind);
    for p in &r.complex_pairs {
        let _ = writeln!(s, "  pair j = {}: |alpha| = {}, theta = {}, rho = {}", p.j, p.modulus, p.theta, p.rho);
    }
    for c in &r.checks {
        let _ = writeln!(s, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }
    let d = &out.degree;
    if let Some(i) = &d.invariants {
        let _ = writeln!(s, "  invariants (M, N, n, d) = ({}, {}, {}, {})", i.m, i.n_norm, i.n, i.d);
    }
    if let Some(iv) = &d.delta {
        let _ = writeln!(s, "  delta(s) in [{:.12}, {:.12}], p_s = {}", approx(&iv.lo), approx(&iv.hi), d.p_s.as_deref().unwrap_or("-"));
    }
    let irr = match d.irreducible {
        Some(true) => "irreducible",
        Some(false) => "composite",
        None => "not decided",
    };
    let _ = writeln!(s, "  nontrivial factor: {irr}, factor degrees [{}]", d.factor_degrees.join(", "));
    s
}

use gpf_core::arguments::{c0, c_of_s, integer_invariants, localize_roots, real_root_multiplicities, x_of_s, y_of_s, NegativeRoot};
use gpf_core::exact::rat;
use gpf_core::numeric::verify::x_real;

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// log of (s-1)^(s-1) z^s / (s^s (1-z)^(s-1)), increasing on (0, 1).
fn log_phi_ratio(s: f64, z: f64) -> f64 {
    (s - 1.0) * (s - 1.0).ln() + s * z.ln() - s * s.ln() - (s - 1.0) * (1.0 - z).ln()
}

#[test]
fn x_against_float_bisection() {
    for s in 2..=30i64 {
        let sf = s as f64;
        let want = bisect(|z| log_phi_ratio(sf, z), 1e-300, 1.0 - 1e-16);
        let x = x_real(&x_of_s(s).unwrap(), 128).to_f64();
        assert!((x - want).abs() < 1e-12, "s = {s}: {x} vs {want}");
        let y = x_real(&y_of_s(s).unwrap(), 128).to_f64();
        assert!((x - sf / (y + sf)).abs() < 1e-12, "s = {s}: x = s/(y + s) fails");
    }
    assert_eq!(x_of_s(3).unwrap().cmp_rational(&rat(3, 4)), std::cmp::Ordering::Equal);
}

#[test]
fn c_against_float_bisection() {
    for s in [2.0f64, 3.0, 7.5, 25.0, 1000.0] {
        let want = bisect(|t| t.ln() + (s - 1.0) * ((s + t) / (s - 1.0)).ln(), 1e-12, 1.0);
        let got = c_of_s(&rat((2.0 * s) as i64, 2), 128).unwrap().to_f64();
        assert!((got - want).abs() < 1e-12, "c({s}) = {got} vs {want}");
    }
    // c0 e^(c0 + 1) = 1 is W(1/e)
    let w = bisect(|t| t * (t + 1.0).exp() - 1.0, 0.0, 1.0);
    assert!((c0(128).to_f64() - w).abs() < 1e-14);
    assert!((w - 0.278465).abs() < 1e-6);
}

#[test]
fn real_roots_by_sign_count() {
    for s in 2..=25i64 {
        let (pos, neg) = real_root_multiplicities(s).unwrap();
        assert_eq!(pos, 1, "s = {s}");
        assert_eq!(neg, if s % 2 == 0 { 1 } else { 2 }, "s = {s}");
    }
}

#[test]
fn suite_for_s_up_to_25() {
    for s in 2..=25i64 {
        let rep = localize_roots(s, 128).unwrap();
        assert!(rep.all_passed(), "s = {s}: {:?}", rep.failed());
        assert_eq!(rep.census, s as usize);
        // complex pairs plus the real roots account for every root
        let real = match rep.negative_root {
            NegativeRoot::Simple { .. } => 2,
            NegativeRoot::Double(v) => {
                assert_eq!(v, 1 - s);
                3
            }
        };
        assert_eq!(2 * rep.complex_pairs.len() + real, s as usize);
        if s >= 3 {
            integer_invariants(s).unwrap();
        }
    }
}

use std::path::Path;
use std::process::Command;

use gpf_cli::wire::{WCertificate, WCertify, WRational, WRootsOutput, WSearch, WVerify};
use jsonschema::{Draft, JSONSchema};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gpf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gpf")).args(args).env_remove("GPF_PRECISION_BITS").output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::options().with_draft(Draft::Draft202012).compile(&v).expect("schema compiles")
}

fn assert_valid(doc: &str) -> Value {
    let v: Value = serde_json::from_str(doc).unwrap();
    let s = schema();
    if let Err(errs) = s.validate(&v) {
        let msgs: Vec<String> = errs.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:#?}");
    }
    v
}

/// Parse into the wire type and write it back byte for byte.
fn round_trip<T: Serialize + DeserializeOwned>(doc: &str) -> T {
    let t: T = serde_json::from_str(doc).unwrap();
    let mut again = serde_json::to_string_pretty(&t).unwrap();
    again.push('\n');
    assert_eq!(again, doc);
    t
}

fn q(n: i64, d: i64) -> WRational {
    WRational { num: n.to_string(), den: d.to_string() }
}

fn lambda_key(c: &WCertificate) -> (String, String, String, String) {
    let l = &c.lambda;
    (l.p.clone(), l.r.clone(), format!("{}/{}", l.a.num, l.a.den), l.x.approx[..6].to_string())
}

#[test]
fn search_golden() {
    let run = gpf(&["search", "--s-max", "3", "--p-max", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_valid(&run.stdout);
    let out: WSearch = round_trip(&run.stdout);
    let prim: Vec<_> = out.certificates.iter().filter(|c| c.primitive).map(lambda_key).collect();
    let want = [
        ("2", "4", "0/1", "0.8284"),
        ("1", "3", "0/1", "0.7500"),
        ("1", "3", "1/3", "0.7500"),
    ];
    assert_eq!(prim.len(), 3);
    for (p, r, a, x) in want {
        assert!(prim.contains(&(p.into(), r.into(), a.into(), x.into())), "missing ({p}, 0, {r}; {a}, 1/2; {x})");
    }
    for c in out.certificates.iter().filter(|c| !c.primitive) {
        let m = c.multiple_of.as_ref().expect("non-primitive hits name their base");
        assert_eq!((m.k.as_str(), m.primitive_p.as_str()), ("2", "1"));
        assert_eq!(c.lambda.r, "6");
    }
    assert!(out.certificates.iter().all(|c| !(c.lambda.p == "1" && c.lambda.r == "2")));
    assert_eq!(out.config.seed, "20240601");
    assert_eq!(out.config.s_max.as_deref(), Some("3"));
}

#[test]
fn certify_outcomes() {
    let run = gpf(&["certify", "--p", "1", "--r", "2", "--a", "0"]);
    assert_eq!(run.code, 0);
    let v = assert_valid(&run.stdout);
    assert_eq!(v["status"], "refused");
    assert!(v["reason"].as_str().unwrap().starts_with("parity"));

    let run = gpf(&["certify", "--p", "1", "--r", "3", "--a", "1/7"]);
    assert_eq!(run.code, 0);
    let v = assert_valid(&run.stdout);
    assert_eq!(v["status"], "refused");
    assert!(v["reason"].as_str().unwrap().contains("not of the form j/s"));

    let run = gpf(&["certify", "--p", "1", "--r", "3", "--a", "0"]);
    assert_eq!(run.code, 0);
    assert_valid(&run.stdout);
    let out: WCertify = round_trip(&run.stdout);
    let cert = out.certificate.unwrap();
    assert_eq!(cert.v, vec![q(0, 1), q(1, 2), q(1, 2)]);
    assert_eq!(cert.sum_check, q(1, 1));
    assert_eq!(cert.formulas.f, "Γ(w+1/3)Γ(w+2/3) / Γ(w+1/2)^2");
    assert!(cert.constants.c.value.starts_with("1.15470053837925152901829"));
    assert_eq!(out.config.a, Some(q(0, 1)));
}

#[test]
fn certificate_survives_core_round_trip() {
    let run = gpf(&["certify", "--p", "2", "--r", "4", "--a", "0"]);
    let out: WCertify = serde_json::from_str(&run.stdout).unwrap();
    let w = out.certificate.unwrap();
    let back = WCertificate::from_core(&w.to_core().unwrap()).unwrap();
    assert_eq!(back, w);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["search", "--s-max", "3"][..],
        &["certify", "--p", "1", "--r", "3", "--a", "x/2"],
        &["certify", "--p", "3", "--r", "2", "--a", "0"],
        &["certify", "--p", "1", "--r", "3", "--a", "0", "--precision-bits", "32"],
        &["roots", "--s", "1"],
        &["bogus"],
    ] {
        let run = gpf(args);
        assert_eq!(run.code, 1, "{args:?}: {}", run.stderr);
        assert!(run.stdout.is_empty());
    }
    assert_eq!(gpf(&["--help"]).code, 0);
}

#[test]
fn verify_passes_and_catches_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let run = gpf(&["certify", "--p", "1", "--r", "3", "--a", "0", "--out", good.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());

    let run = gpf(&["verify", good.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_valid(&run.stdout);
    let out: WVerify = round_trip(&run.stdout);
    let ids: Vec<&str> = out.certificates[0].reports.iter().map(|r| r.identity.as_str()).collect();
    for family in ["gpf1", "gpf2", "gpf-r", "GPF-g", "gpf-h", "ttr2"] {
        assert!(ids.contains(&family), "{family} missing from {ids:?}");
    }
    assert!(out.certificates[0].reports.iter().all(|r| r.verdict == "pass"));

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let v = doc["certificate"]["v"].as_array_mut().unwrap();
    let half = v.iter_mut().find(|e| e["den"] == "2").unwrap();
    half["den"] = "3".into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let run = gpf(&["verify", bad.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    let v = assert_valid(&run.stdout);
    assert_eq!(v["passed"], false);
    let gpf1 = v["certificates"][0]["reports"].as_array().unwrap().iter().find(|r| r["identity"] == "gpf1").unwrap();
    assert_eq!(gpf1["verdict"], "fail");
}

#[test]
fn io_and_parse_failures() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none.json");
    assert_eq!(gpf(&["verify", missing.to_str().unwrap()]).code, 3);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    assert_eq!(gpf(&["verify", junk.to_str().unwrap()]).code, 1);
    let unwritable = dir.path().join("no/such/dir/out.json");
    assert_eq!(gpf(&["roots", "--s", "3", "--out", unwritable.to_str().unwrap()]).code, 3);
}

#[test]
fn roots_reports() {
    let run = gpf(&["roots", "--s", "3"]);
    assert_eq!(run.code, 0);
    assert_valid(&run.stdout);
    let out: WRootsOutput = round_trip(&run.stdout);
    assert!(out.roots.positive_root.approx.starts_with("1.0000000000"));
    assert_eq!(out.roots.negative_root_kind, "double");
    assert_eq!(out.roots.negative_root, "-2");
    let inv = out.degree.invariants.unwrap();
    assert_eq!([inv.m, inv.n_norm, inv.n, inv.d], ["4", "1", "2", "1"].map(String::from));

    let out: WRootsOutput = serde_json::from_str(&gpf(&["roots", "--s", "4"]).stdout).unwrap();
    assert_eq!(out.degree.invariants.unwrap().n, "-3");

    let run = gpf(&["roots", "--s", "12"]);
    assert_eq!(run.code, 0);
    let out: WRootsOutput = serde_json::from_str(&run.stdout).unwrap();
    let pi_check = out.roots.checks.iter().find(|c| c.name.contains("> pi")).expect("rho_m > pi check present");
    assert!(pi_check.passed);
    assert!(out.passed);
}

#[test]
fn deterministic_and_configurable() {
    let a = gpf(&["certify", "--p", "1", "--r", "3", "--a", "1/3", "--seed", "7"]);
    let b = gpf(&["certify", "--p", "1", "--r", "3", "--a", "1/3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["config"]["seed"], "7");

    let env = Command::new(env!("CARGO_BIN_EXE_gpf"))
        .args(["certify", "--p", "1", "--r", "3", "--a", "0"])
        .env("GPF_PRECISION_BITS", "128")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&env.stdout).unwrap();
    assert_eq!(v["config"]["precision_bits"], 128);
    assert_eq!(v["certificate"]["constants"]["C"]["precision_bits"], 128);
}

#[test]
fn text_layout() {
    let run = gpf(&["certify", "--p", "1", "--r", "3", "--a", "1/3", "--format", "text"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("Γ(w)Γ(w+2/3) / Γ(w+1/6)Γ(w+1/2)"), "{}", run.stdout);
    let run = gpf(&["certify", "--p", "1", "--r", "2", "--a", "0", "--format", "text"]);
    assert!(run.stdout.starts_with("refused: parity"));
    let run = gpf(&["roots", "--s", "4", "--format", "text"]);
    assert!(run.stdout.contains("(-27, -27, -3, 4)"));
}

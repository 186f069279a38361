//! `gpf`: search, certify and verify gamma product formulas, and report on
//! the algebraic arguments x_s.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gpf_core::arguments::{degree_report, localize_roots};
use gpf_core::certify::{certify, search, Outcome};
use gpf_core::exact::parse_rational;
use gpf_core::numeric::verify::{verify_certificate, DEFAULT_SEED};
use gpf_core::Error;
use serde::Serialize;

use gpf_cli::render;
use gpf_cli::wire::*;

#[derive(Parser, Debug)]
#[command(name = "gpf", version, about = "Gamma product formulas for 2F1(pw + a, 1/2; rw; x)")]
struct Cli {
    /// Working precision in bits (at least 64).
    #[arg(long, global = true, env = "GPF_PRECISION_BITS", default_value_t = 256)]
    precision_bits: usize,
    /// Seed for the random verification samples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All solutions with 2 <= s <= s-max and 1 <= p <= p-max.
    Search {
        #[arg(long)]
        s_max: i64,
        #[arg(long)]
        p_max: i64,
    },
    /// Decide one (p, 0, r; a, 1/2; x_s), s = r/p.
    Certify {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        r: i64,
        /// Rational as "num/den".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Check every identity of the certificates in FILE numerically.
    Verify { file: PathBuf },
    /// Roots of psi_s and the degree report for s.
    Roots {
        #[arg(long)]
        s: i64,
    },
}

const USAGE: u8 = 1;
const INVARIANT: u8 = 2;
const IO: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Precondition(_) | Error::Domain(_) => USAGE,
            _ => INVARIANT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

/// The rendered report and whether every check in it passed.
type Produced = (String, bool);

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("wire types serialize");
    s.push('\n');
    s
}

fn config(cli: &Cli, command: &str) -> WConfig {
    WConfig {
        command: command.into(),
        precision_bits: cli.precision_bits,
        seed: cli.seed.to_string(),
        format: match cli.format {
            Format::Json => "json",
            Format::Text => "text",
        }
        .into(),
        s_max: None,
        p_max: None,
        p: None,
        r: None,
        a: None,
        s: None,
        file: None,
    }
}

fn cmd_search(cli: &Cli, s_max: i64, p_max: i64) -> Result<Produced, Failure> {
    if s_max < 2 || p_max < 1 {
        return Err(usage("search needs --s-max >= 2 and --p-max >= 1"));
    }
    let certs = search(s_max, p_max, cli.precision_bits)?;
    let wire = certs.iter().map(WCertificate::from_core).collect::<gpf_core::Result<Vec<_>>>()?;
    let out = WSearch {
        config: WConfig { s_max: Some(s_max.to_string()), p_max: Some(p_max.to_string()), ..config(cli, "search") },
        count: wire.len(),
        primitive_count: wire.iter().filter(|c| c.primitive).count(),
        certificates: wire,
    };
    Ok(match cli.format {
        Format::Json => (json(&out), true),
        Format::Text => (render::search(&out), true),
    })
}

fn cmd_certify(cli: &Cli, p: i64, r: i64, a: &str) -> Result<Produced, Failure> {
    let a = parse_rational(a)?;
    let cfg = WConfig { p: Some(p.to_string()), r: Some(r.to_string()), a: Some(WRational::from_core(&a)), ..config(cli, "certify") };
    let out = match certify(p, r, &a, cli.precision_bits)? {
        Outcome::Certified(c) => WCertify {
            config: cfg,
            status: "certified".into(),
            reason: None,
            certificate: Some(WCertificate::from_core(&c)?),
        },
        Outcome::Refused(why) => {
            WCertify { config: cfg, status: "refused".into(), reason: Some(why.to_string()), certificate: None }
        }
    };
    Ok(match cli.format {
        Format::Json => (json(&out), true),
        Format::Text => (render::certify(&out), true),
    })
}

/// Certificates from a search or certify report, a list, or a single one.
fn read_certificates(text: &str) -> Result<Vec<WCertificate>, Failure> {
    let bad = |e: serde_json::Error| usage(format!("certificate file does not parse: {e}"));
    let v: serde_json::Value = serde_json::from_str(text).map_err(bad)?;
    if v.get("certificates").is_some() {
        let s: WSearch = serde_json::from_value(v).map_err(bad)?;
        return Ok(s.certificates);
    }
    if v.get("status").is_some() {
        let c: WCertify = serde_json::from_value(v).map_err(bad)?;
        return c.certificate.map(|c| vec![c]).ok_or_else(|| usage("certify report holds no certificate"));
    }
    if v.is_array() {
        return serde_json::from_value(v).map_err(bad);
    }
    Ok(vec![serde_json::from_value(v).map_err(bad)?])
}

fn cmd_verify(cli: &Cli, file: &PathBuf) -> Result<Produced, Failure> {
    let text = fs::read_to_string(file).map_err(|e| Failure { code: IO, message: format!("{}: {e}", file.display()) })?;
    let certs = read_certificates(&text)?;
    let mut verified = Vec::new();
    for w in &certs {
        let cert = w.to_core()?;
        let reports = verify_certificate(&cert, cli.precision_bits, cli.seed)?;
        let wr: Vec<WReport> = reports.iter().map(WReport::from_core).collect();
        let passed = reports.iter().all(|r| r.verdict);
        verified.push(WVerified { lambda: w.lambda.clone(), reports: wr, passed });
    }
    let passed = verified.iter().all(|v| v.passed);
    let out = WVerify { config: WConfig { file: Some(file.display().to_string()), ..config(cli, "verify") }, certificates: verified, passed };
    Ok(match cli.format {
        Format::Json => (json(&out), passed),
        Format::Text => (render::verify(&out), passed),
    })
}

fn cmd_roots(cli: &Cli, s: i64) -> Result<Produced, Failure> {
    if s < 2 {
        return Err(usage("roots needs --s >= 2"));
    }
    let roots = localize_roots(s, cli.precision_bits)?;
    let degree = degree_report(s)?;
    let passed = roots.all_passed();
    let out = WRootsOutput { config: WConfig { s: Some(s.to_string()), ..config(cli, "roots") }, roots: WRoots::from_core(&roots), degree: WDegree::from_core(&degree), passed };
    Ok(match cli.format {
        Format::Json => (json(&out), passed),
        Format::Text => (render::roots(&out), passed),
    })
}

fn run(cli: &Cli) -> Result<Produced, Failure> {
    if cli.precision_bits < 64 {
        return Err(usage("--precision-bits must be at least 64"));
    }
    match &cli.command {
        Command::Search { s_max, p_max } => cmd_search(cli, *s_max, *p_max),
        Command::Certify { p, r, a } => cmd_certify(cli, *p, *r, a),
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Roots { s } => cmd_roots(cli, *s),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((body, passed)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            if let Err(msg) = written {
                eprintln!("error: {msg}");
                return ExitCode::from(IO);
            }
            ExitCode::from(if passed { 0 } else { INVARIANT })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

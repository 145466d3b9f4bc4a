//! Command-line driver: parses arguments, runs one subcommand and renders
//! the report as a text table or canonical JSON.
//!
//! Exit codes: 0 for data or an applicable criterion, 2 when a hypothesis is
//! refuted, 3 when the verdict rests on a bounded search, 1 on errors.

pub mod commands;
pub mod config;
pub mod human;
pub mod encode;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use fermat_core::arith;
use fermat_core::criteria::TheoremId;
use fermat_core::frey::{Exponent, Family};
use fermat_core::{parse, Error};
use serde_json::{json, Map, Value};

use crate::commands::{FreyArgs, Report};
use crate::config::{Output, RunConfig};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "fermat-check", version, about = "Check asymptotic Fermat criteria for a number field")]
struct Cli {
    /// Emit canonical JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// key = value file overriding the default bounds.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Include wall-clock time in the report (makes JSON run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Signature, discriminant, splitting of 2 and 3, S_K, U_K, units.
    Field { poly: String },
    /// Solutions of λ + μ = 1 in S_K-units within an exponent box.
    Sunit {
        poly: String,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Square classes of S_K-units.
    Selmer { poly: String },
    /// Frey curve invariants for a triple.
    Frey {
        family: FamilyArg,
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        r: Option<u32>,
        /// A prime exponent, or `symbolic`.
        #[arg(long, default_value = "symbolic")]
        p: String,
        /// Report reduction at the primes above this rational prime.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Evaluate the hypotheses of one criterion.
    Check {
        /// Criterion code: thm-3-2, thm-3-3, cor-3-4, thm-5-2, thm-7-1, cor-7-2, thm-7-3-1 or thm-7-3-2.
        theorem: String,
        poly: String,
        /// Exponent of 2 in the relation a^p + b^p = 2^r c^p.
        #[arg(long)]
        r: Option<u32>,
        /// Auxiliary rational prime l, for the criteria that use one.
        #[arg(long)]
        l: Option<u64>,
        /// S-unit exponent bound.
        #[arg(long)]
        bound: Option<u32>,
        /// Class number, for fields where it is not computed.
        #[arg(long)]
        class_number: Option<u64>,
    },
    /// Try every prime l dividing the discriminant in the ramified-inert criterion.
    Scan {
        poly: String,
        #[arg(long)]
        l_max: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    /// x^p + y^p = 2^r z^p
    #[value(name = "2r")]
    TwoR,
    /// x^p + y^p = z^2
    #[value(name = "pp2")]
    Pp2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage_error(msg: impl Into<String>) -> Outcome {
    Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn poly_of(cmd: &Cmd) -> &str {
    match cmd {
        Cmd::Field { poly }
        | Cmd::Sunit { poly, .. }
        | Cmd::Selmer { poly }
        | Cmd::Frey { poly, .. }
        | Cmd::Check { poly, .. }
        | Cmd::Scan { poly, .. } => poly,
    }
}

/// The command as given, after flags are resolved; echoed in every report.
fn echo(cmd: &Cmd, cfg: &RunConfig) -> Value {
    let b = &cfg.bounds;
    let mut m = Map::new();
    let (name, extra): (&str, Value) = match cmd {
        Cmd::Field { .. } => ("field", json!({})),
        Cmd::Sunit { .. } => ("sunit", json!({"bound": b.sunit_exponent_bound})),
        Cmd::Selmer { .. } => ("selmer", json!({"bound": b.sunit_exponent_bound})),
        Cmd::Frey { family, a, b: bb, c, p, prime, .. } => (
            "frey",
            json!({"family": format!("{family:?}").to_lowercase(), "a": a, "b": bb, "c": c, "p": p, "prime": prime, "r": cfg.r}),
        ),
        Cmd::Check { theorem, l, .. } => (
            "check",
            json!({"theorem": theorem, "l": l, "r": cfg.r, "bound": b.sunit_exponent_bound}),
        ),
        Cmd::Scan { .. } => ("scan", json!({"l_max": b.l_max})),
    };
    m.insert("name".into(), json!(name));
    m.insert("poly".into(), json!(poly_of(cmd)));
    if let Value::Object(o) = extra {
        m.extend(o);
    }
    Value::Object(m)
}

fn resolve(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_file(path)?;
    }
    if cli.json {
        cfg.output = Output::Json;
    }
    if cli.timing {
        cfg.timing = true;
    }
    let mut set = |k: &str, v: Option<String>| v.map_or(Ok(()), |v| cfg.set(k, &v));
    match &cli.cmd {
        Cmd::Sunit { bound, .. } => set("bound", bound.map(|v| v.to_string()))?,
        Cmd::Frey { r, .. } => set("r", r.map(|v| v.to_string()))?,
        Cmd::Check { r, bound, class_number, .. } => {
            set("r", r.map(|v| v.to_string()))?;
            set("bound", bound.map(|v| v.to_string()))?;
            set("class_number", class_number.map(|v| v.to_string()))?;
        }
        Cmd::Scan { l_max, .. } => set("l_max", l_max.map(|v| v.to_string()))?,
        Cmd::Field { .. } | Cmd::Selmer { .. } => {}
    }
    Ok(cfg)
}

fn dispatch(cmd: &Cmd, cfg: &RunConfig) -> Result<Report, Error> {
    let k = parse::parse_field(poly_of(cmd))?;
    match cmd {
        Cmd::Field { .. } => commands::field(&k, cfg),
        Cmd::Sunit { .. } => commands::sunit(&k, cfg),
        Cmd::Selmer { .. } => commands::selmer(&k, cfg),
        Cmd::Frey { family, a, b, c, p, prime, .. } => {
            let family = match family {
                FamilyArg::TwoR => Family::TwoPowerTwist { r: cfg.r },
                FamilyArg::Pp2 => Family::PPTwo,
            };
            let p = match p.as_str() {
                "symbolic" => Exponent::Symbolic,
                s => {
                    let n: u32 = s.parse().map_err(|_| Error::Parse(format!("--p expects a prime or 'symbolic', got '{s}'")))?;
                    if !arith::is_prime_u64(n as u64) {
                        return Err(Error::NotPrime(n.into()));
                    }
                    Exponent::Concrete(n)
                }
            };
            commands::frey(&k, &FreyArgs { family, a, b, c, p, prime: *prime })
        }
        Cmd::Check { theorem, l, .. } => {
            let t = TheoremId::from_code(theorem).expect("validated before dispatch");
            commands::check(&k, t, *l, cfg)
        }
        Cmd::Scan { .. } => commands::scan(&k, cfg),
    }
}

/// Run the tool on `argv` (program name first) and collect its output.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    if let Cmd::Check { theorem, .. } = &cli.cmd {
        if TheoremId::from_code(theorem).is_none() {
            let codes: Vec<&str> = TheoremId::ALL.iter().map(|t| t.code()).collect();
            return usage_error(format!("unknown criterion '{theorem}'; expected one of {}", codes.join(", ")));
        }
    }
    let cfg = match resolve(&cli) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let command = echo(&cli.cmd, &cfg);
    let start = Instant::now();
    let outcome = dispatch(&cli.cmd, &cfg);
    let elapsed = start.elapsed().as_millis() as u64;

    let mut top = Map::new();
    top.insert("schema_version".into(), json!(SCHEMA_VERSION));
    top.insert("command".into(), command);
    if cfg.timing {
        top.insert("timing_ms".into(), json!(elapsed));
    }
    match outcome {
        Ok(report) => {
            if let Ok(k) = parse::parse_field(poly_of(&cli.cmd)) {
                top.insert("field".into(), encode::field(&k));
            }
            let stdout = match cfg.output {
                Output::Json => {
                    top.insert("result".into(), report.result);
                    top.insert("caveats".into(), Value::Array(report.caveats));
                    top.insert("exit_code".into(), json!(report.code));
                    encode::emit(&Value::Object(top))
                }
                Output::Human => {
                    let mut s = report.text.finish();
                    for c in &report.caveats {
                        s.push_str(&format!(
                            "caveat ({}): {}\n",
                            c["kind"].as_str().unwrap_or(""),
                            c["detail"].as_str().unwrap_or("")
                        ));
                    }
                    if cfg.timing {
                        s.push_str(&format!("time: {elapsed} ms\n"));
                    }
                    s
                }
            };
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(e) => match cfg.output {
            Output::Json => {
                top.insert("error".into(), json!({"kind": error_kind(&e), "message": e.to_string()}));
                top.insert("exit_code".into(), json!(1));
                Outcome { code: 1, stdout: encode::emit(&Value::Object(top)), stderr: String::new() }
            }
            Output::Human => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
        },
    }
}

use std::io::Write;

use fermat_cli::commands::exit_code;
use fermat_cli::encode::{emit, parse_rat};
use fermat_cli::{run, Outcome};
use fermat_core::criteria::Applies;
use fermat_core::frey::rational;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("fermat-check").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = cli(&a);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

#[test]
fn inert_split_over_q_applies() {
    let (code, v) = json(&["check", "cor-7-2", "x"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["applies"], "yes");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["exit_code"], 0);
}

#[test]
fn sunit_over_q() {
    let (code, v) = json(&["sunit", "x", "--bound", "8"]);
    assert_eq!(code, 0);
    let sols = v["result"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 3);
    let lambdas: Vec<_> = sols.iter().map(|s| parse_rat(&s["lambda"]["coords"][0]).unwrap()).collect();
    assert_eq!(lambdas, [rational(-1, 1), rational(1, 2), rational(2, 1)]);
    assert_eq!(sols[1]["mu"]["coords"][0], "1/2");
    let kinds: Vec<_> = v["caveats"].as_array().unwrap().iter().map(|c| c["kind"].clone()).collect();
    assert!(kinds.contains(&Value::from("bounded_search")));
}

#[test]
fn published_cubic_is_refuted_with_a_table() {
    let out = cli(&["check", "thm-7-1", "x^3 - x^2 + 1", "--l", "23"]);
    assert_eq!(out.code, 2);
    let failing: Vec<&str> = out.stdout.lines().filter(|l| l.contains("  NO  ")).collect();
    assert_eq!(failing.len(), 2, "{}", out.stdout);
    assert!(failing[0].contains("K is totally real"));
    assert!(failing[1].contains("23 totally ramifies") && failing[1].contains("16 (e=2), 15"));
    assert!(out.stdout.contains("note: "));
    assert!(out.stdout.lines().any(|l| l.contains("2 is inert in K") && l.contains(" yes ")));
}

#[test]
fn sunit_criteria_exit_unknown() {
    let (code, v) = json(&["check", "thm-3-2", "x", "--bound", "8"]);
    assert_eq!(code, 3);
    assert_eq!(v["result"]["applies"], "unknown");
    assert_eq!(v["result"]["failures"], 0);
}

#[test]
fn exit_codes_cover_every_verdict() {
    let codes: Vec<i32> = [Applies::Yes, Applies::No, Applies::Unknown].into_iter().map(exit_code).collect();
    assert_eq!(codes, [0, 2, 3]);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["--json", "sunit", "x^2 - 2", "--bound", "4"],
        vec!["--json", "check", "thm-7-1", "x^3 - x^2 + 1", "--l", "23"],
        vec!["--json", "selmer", "x^2 + 1"],
        vec!["--json", "field", "x^2 - x - 1"],
        vec!["check", "thm-5-2", "x", "--bound", "4"],
    ] {
        let a = cli(&args);
        let b = cli(&args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["sunit", "x^2 + 1", "--bound", "3"],
        vec!["frey", "2r", "x", "--a", "3", "--b", "-1", "--c", "1", "--prime", "3"],
        vec!["frey", "pp2", "x^2 - 2", "--a", "1", "--b", "1", "--c", "x", "--p", "5"],
    ] {
        let mut a = vec!["--json"];
        a.extend_from_slice(&args);
        let out = cli(&a);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(emit(&v), out.stdout);
    }
}

#[test]
fn valuation_forms_carry_thresholds() {
    let (code, v) = json(&["frey", "2r", "x", "--a", "3", "--b", "-1", "--c", "1", "--prime", "3"]);
    assert_eq!(code, 0);
    let r = &v["result"]["reductions"][0];
    assert_eq!(r["kind"], "multiplicative");
    assert_eq!(r["v_delta"]["alpha"], 0);
    assert_eq!(r["v_delta"]["beta"], 2);
    assert!(r["v_delta"]["threshold"].is_u64());
    assert_eq!(r["v_j"]["beta"], -2);
}

#[test]
fn concrete_frey_cross_checks() {
    let (code, v) = json(&["frey", "pp2", "x^2 - 2", "--a", "1", "--b", "1", "--c", "x", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["concrete"]["cross_check"]["all"], true);
    assert_eq!(v["result"]["trivial"], true);
    let (code, v) = json(&["frey", "2r", "x", "--a", "1", "--b", "1", "--c", "1", "--r", "2", "--p", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "RelationViolated");
}

#[test]
fn config_file_then_flags() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# test settings\nbound = 2\nr = 3").unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let path = path.as_str();
    let (_, v) = json(&["--config", path, "check", "thm-3-3", "x"]);
    assert_eq!(v["command"]["bound"], 2);
    assert_eq!(v["command"]["r"], 3);
    let (_, v) = json(&["--config", path, "check", "thm-3-3", "x", "--bound", "5"]);
    assert_eq!(v["command"]["bound"], 5);

    writeln!(f, "colour = blue").unwrap();
    let out = cli(&["--config", path, "field", "x"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("colour"));
}

#[test]
fn timing_only_on_request() {
    let (_, v) = json(&["field", "x"]);
    assert!(v.get("timing_ms").is_none());
    let (_, v) = json(&["--timing", "field", "x"]);
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn errors() {
    let (code, v) = json(&["field", "x^2 + 7"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "IndexDivisor");
    let (code, v) = json(&["selmer", "x^3 - x^2 + 1", "--json"]);
    assert_eq!(code, 0, "{v}");

    let out = cli(&["field", "x^2 + 7"]);
    assert_eq!((out.code, out.stdout.as_str()), (1, ""));
    assert!(out.stderr.starts_with("error: 2 divides the index"));

    let out = cli(&["check", "thm-9-9", "x"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("thm-7-1"));

    let out = cli(&["check", "thm-7-1", "x^2 - 2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("--l"));

    let out = cli(&["sunit"]);
    assert_eq!(out.code, 1);
    assert!(!out.stderr.is_empty());

    let out = cli(&["field", "x^2 +"]);
    assert_eq!(out.code, 1);

    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("check"));
}

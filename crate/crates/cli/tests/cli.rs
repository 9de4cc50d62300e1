//! End-to-end tests of the `quartic` binary: exit codes, the JSON schema,
//! and byte-level determinism.

use std::process::{Command, Output};

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_family_c1_json() {
    let out = quartic(&["analyze", "--coeffs", "4,1,-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["transcendental_trivial"], true);
    assert_eq!(v["hd_contains"]["2"], false);
    assert_eq!(v["hd_contains"]["3"], false);
    assert_eq!(v["hd_contains"]["5"], false);
    assert_eq!(v["coefficients"], serde_json::json!(["4", "1", "-1"]));
    assert_eq!(v["unconditional"]["exponent"], 15360);
    assert_eq!(v["unconditional"]["order_br1"], 235929600u64);
    assert_eq!(v["unconditional"]["order_br0"], 7549747200u64);
}

#[test]
fn analyze_generic_bounds() {
    let out = quartic(&["analyze", "--coeffs", "2,3,5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exponent_bound"], 15360);
    assert_eq!(v["order_bound_br_mod_br1"], 235929600u64);
    assert_eq!(v["order_bound_br_mod_br0"], 7549747200u64);
    assert_eq!(v["transcendental_trivial"], false);
}

#[test]
fn analyze_accepts_fractions() {
    let out = quartic(&["analyze", "--coeffs", "1/2,3,-5/7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1/2", "3", "-5/7"]));
}

#[test]
fn analyze_usage_errors_exit_2() {
    assert_eq!(
        quartic(&["analyze", "--coeffs", "0,1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quartic(&["analyze", "--coeffs", "banana,1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quartic(&["analyze", "--coeffs", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(quartic(&["analyze"]).status.code(), Some(2));
}

#[test]
fn verify_usage_errors_exit_2() {
    // sampling prime must be 1 mod 8
    assert_eq!(
        quartic(&["verify", "mizukami", "--mode", "sampled", "--prime", "13"])
            .status
            .code(),
        Some(2)
    );
    // unknown suite is a clap usage error
    assert_eq!(quartic(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_sampled_mizukami_passes() {
    let out = quartic(&[
        "verify", "mizukami", "--mode", "sampled", "--prime", "41", "--trials", "25", "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("[PASS]"));
}

#[test]
fn verify_galois_passes() {
    let out = quartic(&["verify", "galois"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_quick_uses_sampled_mode() {
    let out = quartic(&[
        "verify", "mizukami", "--quick", "--prime", "73", "--trials", "10",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("samples mod 73"));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "verify", "mizukami", "--mode", "sampled", "--prime", "97", "--trials", "20", "--seed",
        "5", "--format", "json",
    ];
    let a = quartic(&args);
    let b = quartic(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));

    let a = quartic(&["analyze", "--coeffs", "4,6,-6", "--format", "json"]);
    let b = quartic(&["analyze", "--coeffs", "4,6,-6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_and_json_reports_agree_field_for_field() {
    let json_out = quartic(&["analyze", "--coeffs", "4,3,-3", "--format", "json"]);
    let text_out = quartic(&["analyze", "--coeffs", "4,3,-3", "--format", "text"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let text = stdout(&text_out);
    let field = |name: &str| -> String {
        text.lines()
            .find(|l| l.starts_with(&format!("{name}:")))
            .unwrap_or_else(|| panic!("missing text field {name}"))
            .split_once(':')
            .unwrap()
            .1
            .trim()
            .to_string()
    };
    assert_eq!(field("coefficients"), "4, 3, -3");
    assert_eq!(field("hd_contains.2"), v["hd_contains"]["2"].to_string());
    assert_eq!(field("hd_contains.3"), v["hd_contains"]["3"].to_string());
    assert_eq!(field("hd_contains.5"), v["hd_contains"]["5"].to_string());
    assert_eq!(
        field("transcendental_trivial"),
        v["transcendental_trivial"].to_string()
    );
    assert_eq!(field("exponent_bound"), v["exponent_bound"].to_string());
    assert_eq!(
        field("order_bound_br_mod_br1"),
        v["order_bound_br_mod_br1"].to_string()
    );
    assert_eq!(
        field("order_bound_br_mod_br0"),
        v["order_bound_br_mod_br0"].to_string()
    );
    assert_eq!(
        field("unconditional.exponent"),
        v["unconditional"]["exponent"].to_string()
    );
    assert_eq!(
        field("unconditional.order_br1"),
        v["unconditional"]["order_br1"].to_string()
    );
    assert_eq!(
        field("unconditional.order_br0"),
        v["unconditional"]["order_br0"].to_string()
    );
}

#[test]
fn family_sweep_matches_published_verdicts() {
    for (c, expect) in [
        ("1", true),
        ("2", false),
        ("3", false),
        ("5", false),
        ("6", true),
        ("7", true),
        ("8", false),
        ("9", true),
        ("10", true),
        ("11", true),
    ] {
        let coeffs = format!("4,{c},-{c}");
        let out = quartic(&["analyze", "--coeffs", &coeffs, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["transcendental_trivial"], expect, "c = {c}");
    }
}

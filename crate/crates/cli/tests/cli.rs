//! End-to-end tests of the `specgraph` binary: JSON envelope shape,
//! status/exit-code mapping, stdin batch mode, and the documented
//! command examples.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

fn specgraph(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(args)
        .env_remove("SPECGRAPH_TOL")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().next().unwrap_or_else(|| panic!("no output: {text}"));
    (
        serde_json::from_str(line).expect("valid JSON envelope"),
        out.status.code().unwrap_or(-1),
    )
}

fn result_f64(v: &Value, key: &str) -> f64 {
    serde_json::from_value(v["result"][key].clone()).unwrap()
}

#[test]
fn spectrum_from_family_expression() {
    let (env, code) = specgraph(&["spectrum", "--family", "K4 + (E3 + E3)"]);
    assert_eq!(code, 0);
    assert_eq!(env["status"], "ok");
    assert_eq!(env["command"], "spectrum");
    assert_eq!(env["result"]["n"], 10);
    assert_eq!(env["result"]["graph6"], "I~~vf~}~_");
    let rho = result_f64(&env, "spectral_radius");
    assert!((rho - 7.898979485566356).abs() < 1e-9);
    let spec = env["result"]["spectrum"].as_array().unwrap();
    let mults: Vec<u64> = spec.iter().map(|p| p[1].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![1, 4, 3, 1, 1]);
}

#[test]
fn spectrum_from_graph6_string() {
    let (env, code) = specgraph(&["spectrum", "--graph6", "Bw"]);
    assert_eq!(code, 0);
    let spec = env["result"]["spectrum"].as_array().unwrap();
    assert_eq!(spec.len(), 2);
    let top: f64 = serde_json::from_value(spec[0][0].clone()).unwrap();
    assert!((top - 2.0).abs() < 1e-9);
    assert_eq!(spec[1][1], 2);
}

#[test]
fn spectrum_signless_laplacian() {
    // Q(K_2) = [[1,1],[1,1]] has eigenvalues {2, 0}
    let (env, code) = specgraph(&[
        "spectrum",
        "--graph6",
        "A_",
        "--matrix",
        "signless-laplacian",
    ]);
    assert_eq!(code, 0);
    let rho = result_f64(&env, "spectral_radius");
    assert!((rho - 2.0).abs() < 1e-9);
}

#[test]
fn vb_of_five_cycle() {
    let (env, code) = specgraph(&["vb", "--graph6", "Dhc"]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["vb"], 1);
    assert_eq!(env["result"]["witness"].as_array().unwrap().len(), 1);
}

#[test]
fn vb_batch_over_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .arg("vb")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"Bw\nEFz_\n\nDhc\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["result"]["vb"], 1); // K_3
    assert_eq!(lines[1]["result"]["vb"], 0); // K_{3,3}
    assert_eq!(lines[2]["result"]["vb"], 1); // C_5
}

#[test]
fn batch_mixes_errors_and_results() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .arg("spectrum")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\nB{\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["status"], "ok");
    assert_eq!(lines[1]["status"], "error");
    assert!(lines[1]["error"].as_str().unwrap().contains("byte 1"));
    assert!(lines[1].get("result").is_none());
}

#[test]
fn counterexample_reports() {
    let (env, code) = specgraph(&["counterexample", "--which", "2.1"]);
    assert_eq!(code, 0);
    assert_eq!(env["status"], "ok");
    let original = result_f64(&env, "original_formula");
    let rho = result_f64(&env, "rho");
    assert!((original - 7.949747468305833).abs() < 1e-9);
    assert!((rho - 7.898979485566356).abs() < 1e-9);
    assert_eq!(env["result"]["original_matches"], false);
    assert_eq!(env["result"]["corrected_matches"], true);

    let (env, code) = specgraph(&["counterexample", "--which", "2.2"]);
    assert_eq!(code, 0);
    let original = result_f64(&env, "original_formula");
    let rho = result_f64(&env, "rho");
    assert!((original - 9.090169943749475).abs() < 1e-9);
    assert!((rho - 9.0).abs() < 1e-9);

    let (env, code) = specgraph(&["counterexample", "--which", "9.9"]);
    assert_eq!(code, 2);
    assert_eq!(env["status"], "error");
}

#[test]
fn formula_values_and_parity_routing() {
    let (env, _) = specgraph(&["formula", "--n", "10", "--k", "4", "--which", "corrected"]);
    assert!((result_f64(&env, "value") - 7.898979485566356).abs() < 1e-9);

    let (env, _) = specgraph(&["formula", "--n", "10", "--k", "4", "--which", "original"]);
    assert!((result_f64(&env, "value") - 7.949747468305833).abs() < 1e-9);

    // odd parity routes the corrected value through the 3x3 quotient
    let (env, _) = specgraph(&["formula", "--n", "10", "--k", "3", "--which", "corrected"]);
    assert_eq!(env["result"]["parity"], "odd");
    assert!((result_f64(&env, "value") - 7.3653001512132095).abs() < 1e-8);

    let (env, code) = specgraph(&["formula", "--n", "10", "--k", "3", "--which", "original"]);
    assert_eq!(code, 2);
    assert_eq!(env["status"], "error");
}

#[test]
fn search_certificate_and_contract_error() {
    let (env, code) = specgraph(&[
        "search", "--n", "6", "--k", "2", "--workers", "2", "--tol", "1e-7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["candidate_matches"], true);
    assert_eq!(env["result"]["family_count"], 107);
    assert_eq!(env["result"]["enumerated"], 32768);
    assert!((result_f64(&env, "max_rho") - 4.372281323269014).abs() < 1e-7);

    let (env, code) = specgraph(&["search", "--n", "3", "--k", "1"]);
    assert_eq!(code, 2);
    assert!(env["error"].as_str().unwrap().contains("k <= n-3"));
}

#[test]
fn sweep_all_pass_and_empty_table() {
    let (env, code) = specgraph(&["sweep", "--n-max", "14", "--parity", "even"]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["all_pass"], true);
    let rows = env["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r["parity"] == "even" && r["pass"] == true));

    let (env, code) = specgraph(&["sweep", "--n-max", "14", "--parity", "odd"]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["all_pass"], true);
    assert_eq!(env["result"]["rows"].as_array().unwrap().len(), 36);

    let (env, code) = specgraph(&["sweep", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn tolerance_env_var_is_honored() {
    // an absurdly large tolerance makes the original formula "match",
    // flipping the counterexample verdict to mismatch (exit 1)
    let out = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(["counterexample", "--which", "2.1"])
        .env("SPECGRAPH_TOL", "1.0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let env: Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(env["status"], "mismatch");
    assert_eq!(env["result"]["original_matches"], true);
}

#[test]
fn envelope_key_order_is_stable() {
    let (env, _) = specgraph(&["formula", "--n", "6", "--k", "2", "--which", "corrected"]);
    let keys: Vec<&str> = env.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, vec!["command", "parameters", "result", "status"]);
}

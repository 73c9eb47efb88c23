//! Golden transcripts for the command-line surface: exit-code contract,
//! pipe composition, and JSON round-trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pseudoconvex"))
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn builtin_pipes_into_recognize() {
    let no21 = run(&["builtin", "no21"]);
    assert_eq!(no21.status.code(), Some(0));
    let rec = run_with_input(&["recognize", "--json"], &stdout_of(&no21));
    assert_eq!(rec.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&rec)).unwrap();
    assert_eq!(v["status"], "ok");
    assert!(v["payload"]["order"].is_array());
    assert_eq!(v["payload"]["signature"].as_array().unwrap().len(), 6);
}

#[test]
fn no21plus_is_negative() {
    let plus = run(&["builtin", "no21plus"]);
    let rec = run_with_input(&["recognize"], &stdout_of(&plus));
    assert_eq!(rec.status.code(), Some(1));
    assert!(stdout_of(&rec).contains("status: negative"));
}

#[test]
fn generate_verify_roundtrip() {
    let gen = run(&["generate", "--n", "8", "--m", "10", "--seed", "7"]);
    assert_eq!(gen.status.code(), Some(0));
    let text = stdout_of(&gen);
    // Emitted JSON re-parses to an equal value.
    let v1: serde_json::Value = serde_json::from_str(&text).unwrap();
    let v2: serde_json::Value =
        serde_json::from_str(&stdout_of(&run(&["generate", "--n", "8", "--m", "10", "--seed", "7"])))
            .unwrap();
    assert_eq!(v1, v2);
    let verify = run_with_input(&["verify", "--json"], &text);
    assert_eq!(verify.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&verify)).unwrap();
    assert_eq!(v["payload"]["all_passed"], true);
}

#[test]
fn premise_violation_exit_code() {
    let no21 = stdout_of(&run(&["builtin", "no21"]));
    let helly = run_with_input(
        &["helly", "--targets", "0;1;2;3;4;5", "--json"],
        &no21,
    );
    assert_eq!(helly.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&helly)).unwrap();
    assert_eq!(v["status"], "premise_violated");

    let conv4 = stdout_of(&run(&["builtin", "convex_position", "--size", "4"]));
    let kirch = run_with_input(
        &["kirchberger", "--set-a", "0,2", "--set-b", "1,3"],
        &conv4,
    );
    assert_eq!(kirch.status.code(), Some(2));
}

#[test]
fn separate_negative_with_certificate() {
    let conv4 = stdout_of(&run(&["builtin", "convex_position", "--size", "4"]));
    let sep = run_with_input(
        &["separate", "--set-a", "0,2", "--set-b", "1,3", "--json"],
        &conv4,
    );
    assert_eq!(sep.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&sep)).unwrap();
    assert_eq!(v["status"], "negative");
    assert!(v["payload"]["certificate"]["subset"].is_array());
}

#[test]
fn malformed_input_is_an_input_error() {
    let out = run_with_input(&["recognize"], "{ not json");
    assert_eq!(out.status.code(), Some(3));
    let out = run_with_input(&["recognize"], r#"{"n": 2, "edges": [{"members": [5]}]}"#);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn query_commands_compose() {
    let no21 = stdout_of(&run(&["builtin", "no21"]));
    let hull = run_with_input(&["hull", "--set", "0,2", "--json"], &no21);
    assert_eq!(hull.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&hull)).unwrap();
    assert!(v["payload"]["hull"].is_array());

    let ext = run_with_input(&["extremal", "--json"], &no21);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&ext)).unwrap();
    assert!(v["payload"]["T"].is_array());
    assert!(v["payload"]["circular"].is_array());

    let orient = run_with_input(&["orient", "--triple", "0,1,2"], &no21);
    assert_eq!(orient.status.code(), Some(0));

    let inside = run_with_input(&["inside", "--vertex", "1", "--set", "0,2,3", "--json"], &no21);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&inside)).unwrap();
    assert_eq!(v["payload"]["strongly_inside"], true);

    // Extension output carries the extended instance, which pipes onward.
    let levi = run_with_input(&["levi", "--p", "0", "--q", "3", "--json"], &no21);
    assert_eq!(levi.status.code(), Some(0));
    let rec = run_with_input(&["recognize", "--order", "0,1,2,3,4,5"], &stdout_of(&levi));
    assert_eq!(rec.status.code(), Some(0));
}

#[test]
fn hemisphere_commands() {
    let h14 = stdout_of(&run(&["builtin", "hemisphere14"]));
    let rec = run_with_input(&["recognize-hemisphere", "--order", "0,1,2,3", "--json"], &h14);
    assert_eq!(rec.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&rec)).unwrap();
    assert!(v["payload"]["shift"].is_array());

    let h15 = stdout_of(&run(&["builtin", "hemisphere15"]));
    let rec = run_with_input(&["recognize-hemisphere"], &h15);
    assert_eq!(rec.status.code(), Some(1));
}

#[test]
fn from_points_with_rationals() {
    let config = r#"{
        "points": [["0","0"], ["4","0"], ["21/10","3"], ["2","1"]],
        "lines": [
            {"a": 0, "b": 1, "c": "-1/2", "side": "below"},
            {"a": "-7/5", "b": 1, "c": "1/10", "side": "above"}
        ]
    }"#;
    let out = run_with_input(&["from-points", "--json"], config);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["payload"]["n"], 4);
    // Floating point is rejected.
    let bad = r#"{"points": [[0.5, 1]], "lines": []}"#;
    let out = run_with_input(&["from-points"], bad);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn max_n_flag_and_environment() {
    let gen = stdout_of(&run(&["generate", "--n", "13", "--m", "4", "--seed", "3"]));
    let sat = run_with_input(&["saturate"], &gen);
    assert_eq!(sat.status.code(), Some(3), "default guard refuses n = 13");
    let sat = run_with_input(&["saturate", "--max-n", "13"], &gen);
    assert_eq!(sat.status.code(), Some(0));
    let mut child = bin()
        .args(["saturate"])
        .env("PSEUDOCONVEX_MAX_N", "13")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(gen.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cupcap_and_radon_surface() {
    let gen = stdout_of(&run(&["generate", "--n", "9", "--m", "8", "--seed", "11"]));
    let cup = run_with_input(&["cupcap", "-k", "3", "-l", "3", "--json"], &gen);
    assert_eq!(cup.status.code(), Some(0));
    let radon = run_with_input(&["radon", "--set", "0,2,4,6", "--json"], &gen);
    assert_eq!(radon.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&radon)).unwrap();
    assert_eq!(v["payload"]["verified"], true);
    let bad = run_with_input(&["radon", "--set", "0,1,2"], &gen);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn file_output_flag() {
    let dir = std::env::temp_dir().join("pseudoconvex-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = run(&[
        "generate",
        "--n",
        "5",
        "--m",
        "4",
        "--seed",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["n"], 5);
    let rec = run(&["recognize", "--input", path.to_str().unwrap()]);
    assert_eq!(rec.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

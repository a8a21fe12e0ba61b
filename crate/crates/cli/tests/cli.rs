use std::process::{Command, Output};

use serde_json::Value;

fn qecent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qecent")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "data"];
    full.extend_from_slice(args);
    let o = qecent(&full);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn five_qubit_corrects_two_erasures() {
    let (code, v) = data(&["verify", "five-qubit", "--erasure", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["entropic"]["witnesses"].as_array().unwrap().len(), 0);
    assert_eq!(v["kl"]["pass"], true);
}

#[test]
fn repetition_code_fails_with_one_witness_per_qubit() {
    let o = qecent(&["verify", "quantum-rep3", "--erasure", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let (_, v) = data(&["verify", "quantum-rep3", "--erasure", "1"]);
    let w = v["entropic"]["witnesses"].as_array().unwrap();
    assert_eq!(w.len(), 3);
    for x in w {
        assert!((x["magnitude"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    }
}

#[test]
fn error_mode_and_classical_modes() {
    assert_eq!(qecent(&["verify", "five-qubit", "--error", "1"]).status.code(), Some(0));
    assert_eq!(qecent(&["verify", "five-qubit", "--error", "2"]).status.code(), Some(1));
    let (code, v) = data(&["verify", "classical-5-2", "--classical"]);
    assert_eq!(code, 0);
    assert_eq!(v["distance"]["min_distance"], 3);
    assert_eq!(qecent(&["verify", "classical-5-2", "--erasure", "2"]).status.code(), Some(0));
    assert_eq!(qecent(&["verify", "classical-5-2", "--erasure", "3"]).status.code(), Some(1));
    assert_eq!(qecent(&["verify", "classical-5-2", "--error", "1"]).status.code(), Some(0));
    assert_eq!(qecent(&["verify", "five-qubit", "--classical"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let o = qecent(&["verify", "/nonexistent/code.txt", "--erasure", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(qecent(&["simulate", "five-qubit", "--pattern", "7"]).status.code(), Some(2));
    assert_eq!(qecent(&["diagram", "five-qubit", "--split", "R:0,1"]).status.code(), Some(2));
    assert_eq!(qecent(&["verify", "five-qubit"]).status.code(), Some(2));
}

#[test]
fn swap_on_repetition_code_loses_one_bit() {
    let (code, v) = data(&["simulate", "quantum-rep3", "--pattern", "0", "--interaction", "swap"]);
    assert_eq!(code, 1);
    let r = &v["reports"][0];
    assert!((r["M"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!((r["L"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert_eq!(r["verdict"], "lossy");
}

#[test]
fn five_qubit_sweeps_are_lossless() {
    let (code, v) = data(&["simulate", "five-qubit", "--e", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 1);
    assert!(v["max_L"].as_f64().unwrap().abs() < 1e-8);
    let (code, v) = data(&["simulate", "five-qubit", "--all-patterns", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 10);
    assert!(v["max_M"].as_f64().unwrap().abs() < 1e-8);
}

#[test]
fn diagrams_of_codes_and_states() {
    let (_, d) = data(&["diagram", "five-qubit", "--split", "R:0,1/2,3,4"]);
    assert!((d["s_x"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!(d["m_xy"].as_f64().unwrap().abs() < 1e-8);
    assert!(d["s_xyz"].as_f64().unwrap().abs() < 1e-8);

    let (_, d) = data(&["diagram", "classical-5-2", "--erase", "0,4"]);
    assert_eq!(d["x"], "X");
    assert!((d["s_x"].as_f64().unwrap() - 2.0).abs() < 1e-8);
    assert!(d["c_x"].as_f64().unwrap().abs() < 1e-8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ghz.json");
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![[0.0, 0.0]; 8];
    amps[0] = [h, 0.0];
    amps[7] = [h, 0.0];
    let state = serde_json::json!({
        "layout": [{"label": "q0", "dim": 2}, {"label": "q1", "dim": 2}, {"label": "q2", "dim": 2}],
        "amplitudes": amps,
    });
    std::fs::write(&path, state.to_string()).unwrap();
    let (code, d) = data(&["diagram", "--state", path.to_str().unwrap(), "--split", "0/1/2"]);
    assert_eq!(code, 0);
    assert!((d["s_x"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!(d["t"].as_f64().unwrap().abs() < 1e-8);
    assert!((d["c_x"].as_f64().unwrap() + 1.0).abs() < 1e-8);
}

#[test]
fn search_refuses_infeasible_and_writes_a_code_file() {
    let o = qecent(&["search", "4", "3", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k ≤ n−2e violated"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("found.code");
    let o = qecent(&["search", "2", "0", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = qecent(&["verify", out.to_str().unwrap(), "--erasure", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bounds_report_saturation() {
    let o = qecent(&["bounds", "5", "1", "--e", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1 ≤ 1 OK (saturated)"));
    assert!(text.contains("N_c = 2/3 = bound (saturated)"));

    let (code, v) = data(&["bounds", "9", "1", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["quantum"]["limit"], 1);
    assert_eq!(v["quantum"]["saturated"], true);

    let o = qecent(&["bounds", "4", "3", "--e", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated"));
}

#[test]
fn list_names_every_builtin() {
    let text = stdout(&qecent(&["list"]));
    for name in ["classical-rep3", "classical-5-2", "quantum-rep3", "five-qubit", "four-qubit"] {
        assert!(text.contains(name), "{name} missing");
    }
}

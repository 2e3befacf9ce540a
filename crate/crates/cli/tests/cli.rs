use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resolventlab"))
        .args(args)
        .env_remove("RESOLVENTLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn group_selftest() {
    let out = run(&["group", "selftest"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() > 10);
    assert!(!text.contains("FAIL"));
}

#[test]
fn sextic_check_explicit() {
    let v = json(&run(&[
        "sextic",
        "check",
        "--coeffs",
        "11,64,80,40,0,4,1",
        "--pmax",
        "500",
    ]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["real_roots"], 2);
    assert_eq!(v["galois"]["verdict"], "ConsistentS5a");
}

#[test]
fn sextic_check_with_companion() {
    let v = json(&run(&[
        "sextic",
        "check",
        "--coeffs",
        "102400,-3091456,44800,8960,880,40,1",
        "--companion",
        "-1,-1,0,0,0,1",
    ]));
    assert_eq!(v["galois"]["verdict"], "CertifiedS5a");
    assert_eq!(v["pass"], true);
}

#[test]
fn sextic_check_rejects_bad_input() {
    let out = run(&["sextic", "check", "--coeffs", "1,x,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn hermite_check() {
    let v = json(&run(&["hermite", "check", "--s", "-10", "--t", "-1"]));
    assert_eq!(v["region"]["sturm_class"], "Red");
    assert_eq!(v["region"]["real_roots"], 3);
    assert_eq!(v["resolvent_check"]["pass"], false);
}

#[test]
fn hermite_grid_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&[
            "hermite",
            "grid",
            "--n",
            "50",
            "--seed",
            "1",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 51);
}

#[test]
fn ec_resolvent_and_mod5() {
    let v = json(&run(&["ec", "resolvent", "--a", "0,1,1,0,0"]));
    assert_eq!(v["sextic_coeffs"], "11,64,80,40,0,4,1");
    assert_eq!(v["invariants"]["disc"], "-43");
    let v = json(&run(&["ec", "mod5", "--a", "0,1,1,0,0", "--pmax", "1000"]));
    assert_eq!(v["verdict"], "ConsistentFull");
    let v = json(&run(&[
        "ec",
        "theorem",
        "--a",
        "0,0,0,0,1",
        "--pmax",
        "1000",
    ]));
    assert_eq!(v["pass"], false);
}

#[test]
fn scan_writes_report_and_flags_row_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.csv");
    fs::write(
        &input,
        "label,f,h\nexplicit,11:64:80:40:0:4:1,0\nx6+1,1:0:0:0:0:0:1,0\nbroken,1:y,0\n",
    )
    .unwrap();
    let out_path = dir.path().join("report.json");
    let args = [
        "scan",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
        "--jobs",
        "2",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(2));
    let report: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["pass"], 1);
    assert_eq!(report["summary"]["fail"], 1);
    assert_eq!(report["row_errors"].as_array().unwrap().len(), 1);
    let summary = fs::read_to_string(dir.path().join("report.summary.csv")).unwrap();
    assert!(summary.starts_with("label,verdict,real_roots,galois_verdict,reasons"));
    assert!(summary.contains("explicit,pass,2,ConsistentS5a"));
}

#[test]
fn scan_jobs_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    fs::write(
        &input,
        "{\"label\":\"explicit\",\"f\":[11,64,80,40,0,4,1],\"h\":[]}\n",
    )
    .unwrap();
    let mut reports = Vec::new();
    for jobs in ["1", "3"] {
        let out_path = dir.path().join(format!("r{jobs}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_resolventlab"))
            .args([
                "scan",
                "--format",
                "jsonl",
                "--input",
                input.to_str().unwrap(),
            ])
            .args(["--out", out_path.to_str().unwrap()])
            .env("RESOLVENTLAB_JOBS", jobs)
            .output()
            .unwrap()
            .status;
        assert!(status.success());
        reports.push(fs::read(&out_path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}

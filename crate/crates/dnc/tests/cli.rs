mod common;

use std::fs;
use std::process::{Command, Output};

use dnc::Report;
use serde_json::json;

fn dnc(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut p = Command::new(env!("CARGO_BIN_EXE_dnc"));
    p.args(args);
    match cache {
        Some(dir) => p.env("DNC_CACHE_DIR", dir),
        None => p.arg("--no-cache"),
    };
    p.output().unwrap()
}

fn input(name: &str) -> String {
    common::inputs_dir().join(format!("{name}.dnc")).display().to_string()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fiber_generic_on_c1() {
    let out = dnc(&["fiber", "--input", &input("c1"), "--at", "generic"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdict"], json!(true));
    assert_eq!(r["result"]["isomorphic_to_laurent"]["expected"], json!(["-u*t + x1", "tinv*t - 1"]));
    assert!(r["timing_ms"].is_u64());
}

#[test]
fn options_reach_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = dnc(
        &["homology", "--input", &input("c2"), "--cutoff", "4", "--weight", "-1..1", "--hdeg", "0..1", "--out", path.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["input"]["cutoff"], json!(4));
    assert_eq!(r["result"]["rees"]["weight"], json!([-1, 1]));
    assert_eq!(r["result"]["rees"]["hdeg"], json!([0, 1]));
    let out = dnc(&["infnbhd", "--input", &input("c1"), "--level", "2"], None);
    assert_eq!(report(&out)["result"]["kernel"]["basis"], json!(["u^3"]));
}

#[test]
fn errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dnc");
    fs::write(&bad, "ring Q[x];\ncenter (x, q);\n").unwrap();
    let out = dnc(&["rees", "--input", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("2:12: unknown variable `q`"), "{msg}");

    assert_eq!(dnc(&["frobnicate", "--input", &input("c1")], None).status.code(), Some(1));
    let out = dnc(&["compare-deformation", "--input", &input("c0")], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no generators"));
}

#[test]
fn failed_verdict_exits_with_two() {
    let r = Report {
        command: "rees".into(),
        input: json!({}),
        result: json!({}),
        verdict: Some(false),
        timing_ms: 0,
    };
    assert_eq!(r.exit_code(), 2);
    assert_eq!(Report { verdict: None, ..r.clone() }.exit_code(), 0);
    assert_eq!(Report { verdict: Some(true), ..r }.exit_code(), 0);
}

#[test]
fn cache_is_used_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["compare-deformation", "--input", &input("c4")];
    let plain = report(&dnc(&args, None));
    let cold = dnc(&args, Some(dir.path()));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());
    for f in &files {
        fs::write(f, "{\"version\": 99}").unwrap();
    }
    let warm = dnc(&args, Some(dir.path()));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("corrupt cache file"));
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    assert_eq!(strip(report(&cold)), strip(plain.clone()));
    assert_eq!(strip(report(&warm)), strip(plain));
    // recomputed entries were written back
    assert!(dnc(&args, Some(dir.path())).stderr.is_empty());
}

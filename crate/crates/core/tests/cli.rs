use std::process::Command;

use serde_json::Value;

fn coxalg(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coxalg")).args(args).output().expect("run coxalg");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn without_timings(mut v: Value) -> Value {
    for item in v["items"].as_array_mut().unwrap() {
        item.as_object_mut().unwrap().remove("wall_ms");
    }
    v
}

#[test]
fn group_analyze_reports_structure() {
    let (code, out) = coxalg(&["group", "analyze", &data("g4.group")]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 24"), "{out}");
    assert!(out.contains("commutator subgroup order: 8"), "{out}");
    assert!(out.contains("Z3"), "{out}");
}

#[test]
fn semistable_supports_from_weight_file() {
    let (code, out) = coxalg(&["git", "semistable", "--weights", &data("d8.weights"), "--chi", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 13);
    assert!(out.contains("{w02, u2}  isotropy nontrivial"), "{out}");
}

#[test]
fn case_run_writes_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (code, out) = coxalg(&["case", "run", "s3", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
    }
    let read = |p: &std::path::Path| without_timings(serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap());
    let (ra, rb) = (read(&a), read(&b));
    assert_eq!(ra, rb);
    assert_eq!(ra["case"], "s3");
    assert!(ra["items"].as_array().unwrap().iter().all(|i| i["status"] == "PASS"));
}

#[test]
fn persisted_cache_gives_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let (cold, warm) = (out("cold.json"), out("warm.json"));
    assert_eq!(coxalg(&["--cache-dir", cache, "case", "run", "s3", "--out", &cold]).0, 0);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 2, "cache files written");
    assert_eq!(coxalg(&["--cache-dir", cache, "case", "run", "s3", "--out", &warm]).0, 0);
    let read = |p: &str| without_timings(serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap());
    assert_eq!(read(&cold), read(&warm));
}

#[test]
fn unknown_case_is_an_error() {
    let (code, _) = coxalg(&["cox", "synth", "e8"]);
    assert_eq!(code, 1);
}

#[test]
fn geometry_commands_need_d8() {
    let (code, _) = coxalg(&["toric", "quotient-fan", "s3"]);
    assert_eq!(code, 1);
    let (code, out) = coxalg(&["toric", "quotient-fan", "d8-wreath"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("Hirzebruch a = Some(4)"), "{out}");
}

//! End-to-end tests of the binary: exit-code contract, JSON output,
//! cache behavior, and resilience to corrupted fixtures and cache entries.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_torsion-obstruct"));
    // keep the environment from redirecting the cache under test
    c.env_remove("TORSION_OBSTRUCT_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["spectrum"]).status.code(), Some(2), "missing argument");
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let o = run(&["spectrum", "C0"]);
    assert_eq!(o.status.code(), Some(2), "semantic parse error");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("at 1") && err.contains("n >= 1"), "{err}");
    assert_eq!(run(&["ssg", "Q(8)"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "SG(96,65)"]).status.code(), Some(2), "unknown catalog id");
}

#[test]
fn cap_exhaustion_exits_3() {
    let o = run(&["ssg", "C100 x C4"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["--cap", "500", "ssg", "C2 x C2"]);
    assert_eq!(o.status.code(), Some(0), "raised cap admits the group");
}

#[test]
fn spectrum_and_min_dim_answers() {
    let o = run(&["spectrum", "DC(6)", "--min", "2", "--max", "10", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["schema"], "torsion-obstruct/1");
    assert_eq!(v["genera"], serde_json::json!([6]));

    let o = run(&["sphere-min-dim", "7", "3"]);
    assert!(stdout_str(&o).trim().ends_with("5"));
    let o = run(&["sphere-min-dim", "7", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["min_sphere_dim"], 5);
}

#[test]
fn verify_suite_json_passes() {
    let o = run(&["verify", "symplectic", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["schema"], "torsion-obstruct/1");
}

fn bundled_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

#[test]
fn corrupted_fixture_exits_1() {
    let tmp = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(bundled_fixture_dir()).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), tmp.path().join(entry.file_name())).unwrap();
    }
    let manifest = tmp.path().join("manifest.json");
    let text = fs::read_to_string(&manifest).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // claim a wrong class count for the first fixture
    v["fixtures"][0]["num_classes"] = serde_json::json!(99);
    fs::write(&manifest, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let name = v["fixtures"][0]["file"].as_str().unwrap().to_string();
    let arg = format!("P({})", tmp.path().join(&name).display());
    let o = run(&["ssg", &arg]);
    assert_eq!(o.status.code(), Some(1), "invariant mismatch is a verification failure");

    // sanity: the pristine bundled fixture loads fine
    let o = run(&["ssg", "P(2T)"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cache_round_trips_and_survives_corruption() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().to_str().unwrap();

    let args = ["--json", "--cache-dir", dir, "embeds-so", "4", "SG(32,2)"];
    let cold = run(&args);
    assert_eq!(cold.status.code(), Some(0));
    let entries: Vec<_> = fs::read_dir(tmp.path()).unwrap().collect();
    assert!(!entries.is_empty(), "cache populated");
    let warm = run(&args);
    assert_eq!(stdout_str(&cold), stdout_str(&warm), "warm rerun is byte-identical");

    // same table requested through the environment variable override
    let o = bin()
        .env("TORSION_OBSTRUCT_CACHE", dir)
        .args(["--json", "embeds-so", "4", "SG(32,2)"])
        .output()
        .unwrap();
    assert_eq!(stdout_str(&cold), stdout_str(&o));

    // spectrum reports cache too, and reruns identically
    let sp = ["--json", "--cache-dir", dir, "spectrum", "DC4", "--min", "2", "--max", "8"];
    let first = run(&sp);
    let second = run(&sp);
    assert_eq!(stdout_str(&first), stdout_str(&second));

    // clobber every entry: the tool must recompute, not crash
    for e in fs::read_dir(tmp.path()).unwrap() {
        fs::write(e.unwrap().path(), b"{ not json").unwrap();
    }
    let recomputed = run(&args);
    assert_eq!(recomputed.status.code(), Some(0));
    assert_eq!(stdout_str(&cold), stdout_str(&recomputed));
}

#[test]
fn unwritable_cache_dir_warns_and_continues() {
    let o = bin()
        .args(["--json", "--cache-dir", "/proc/no-such-dir/cache", "embeds-so", "3", "D5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "cache failure must not fail the query");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("cache disabled"), "{err}");
}

#[test]
fn verdict_commands() {
    let o = run(&["witness-sp", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["group_order"], 81);

    let o = run(&["sphere", "DC2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["tests"]["so4"], true);
    assert_eq!(v["tests"]["so3"], false);
}

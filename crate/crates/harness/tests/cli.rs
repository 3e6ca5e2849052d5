use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn modlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modlat")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_ring_text() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "cyclic12.json", r#"{"kind":"cyclic","n":12}"#);
    let out = modlat(&["analyze", &ring]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "hdim 2"), "{text}");
    assert!(text.lines().any(|l| l == "Rad {0,6}"), "{text}");
}

#[test]
fn analyze_module_json() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "r.json", r#"{"kind":"cyclic","n":4}"#);
    let module = write(
        dir.path(),
        "m.json",
        r#"{"kind":"direct_sum","parts":[{"kind":"regular","side":"left"},
            {"kind":"quotient","of":{"kind":"regular","side":"left"},"by":[2]}]}"#,
    );
    let out = modlat(&["analyze", &ring, "--module", &module, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["module"]["profile"]["hdim"], 2);
    assert_eq!(value["self_projective"], false);
    assert!(value["non_lifting"]["kernel"].is_array());
}

#[test]
fn malformed_json_exits_two_with_position() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "garbage.json", "{\"kind\": \"cyclic\",\n  \"n\": }");
    let out = modlat(&["analyze", &ring]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("garbage.json:2:"), "{err}");
    let unknown = write(dir.path(), "unknown.json", r#"{"kind":"cyclic","m":3}"#);
    assert_eq!(modlat(&["analyze", &unknown]).status.code(), Some(2));
    assert_eq!(modlat(&["analyze", "/nonexistent/ring.json"]).status.code(), Some(2));
    assert_eq!(modlat(&["verify", "--theorems", "thm-9.9"]).status.code(), Some(2));
}

#[test]
fn lattice_writes_dot() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "r.json", r#"{"kind":"cyclic","n":12}"#);
    let module = write(dir.path(), "m.json", r#"{"kind":"regular","side":"left"}"#);
    let dot = dir.path().join("l.dot");
    let out = modlat(&["lattice", &ring, "--module", &module, "--dot", &dot.display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 7);
}

#[test]
fn verify_filtered_writes_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let out = modlat(&[
        "verify",
        "--theorems",
        "lemma-3.4,cor-3.2",
        "--jobs",
        "2",
        "--report",
        &report.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["config"]["theorems"], serde_json::json!(["cor-3.2", "lem-3.4"]));
    assert_eq!(value["summary"]["pass"], 24);
    assert_eq!(value["timings"]["jobs"], 2);
}

#[test]
fn verify_directory_corpus_reports_bad_entries() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "a.json", r#"{"ring":{"kind":"cyclic","n":4}}"#);
    write(dir.path(), "b.json", r#"{"ring":{"kind":"cyclic","n":3},"goldens":{"hdim_left":2}}"#);
    write(dir.path(), "c.json", r#"{"ring":"#);
    let report = dir.path().join("r.json");
    let out = modlat(&[
        "verify",
        "--corpus",
        &dir.path().display().to_string(),
        "--theorems",
        "goldens,thm-1.4",
        "--report",
        &report.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    let rows = value["results"].as_array().unwrap();
    let status = |theorem: &str, instance: &str| {
        rows.iter()
            .find(|r| r["theorem"] == theorem && r["instance"] == instance)
            .map(|r| r["status"].as_str().unwrap().to_string())
    };
    assert_eq!(status("input", "c.json").as_deref(), Some("fail"));
    assert_eq!(status("goldens", "cyclic(3)").as_deref(), Some("fail"));
    assert_eq!(status("goldens", "cyclic(4)").as_deref(), Some("skipped"));
    assert_eq!(status("thm-1.4", "cyclic(4)/regular-left").as_deref(), Some("pass"));
}

#[test]
fn info_lists_theorems() {
    let out = modlat(&["info"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("caps elements=4096 lattice=100000 homs=65536"));
    for id in ["thm-1.4", "lem-3.4", "prop-3.14", "good-module"] {
        assert!(text.contains(id));
    }
}

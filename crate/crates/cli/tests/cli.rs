// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn kaschlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaschlab")).current_dir(root()).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = kaschlab(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn r4_json_report() {
    let v = json(&["analyze", "examples/R4.alg", "--json"]);
    assert_eq!(v["report"]["nakayama"], serde_json::json!([2, 1]));
    assert_eq!(v["report"]["strongly_dual_kasch_right"], Value::Bool(false));
    assert_eq!(v["algebra"]["dim"], 4);
    kaschlab_cli::report::validate(&v).unwrap();
}

#[test]
fn t2_text_shows_the_dual_kasch_witness() {
    let out = kaschlab(&["analyze", "examples/T2.alg"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dual Kasch (right): NO — witness: Hom(E(e2·A), S2) = 0"));
}

#[test]
fn text_and_json_carry_the_same_booleans() {
    let v = json(&["analyze", "examples/A5.alg", "--json"]);
    let text = stdout(&kaschlab(&["analyze", "examples/A5.alg", "--text"]));
    for (key, label) in [("kasch", "Kasch"), ("dual_kasch", "dual Kasch"), ("self_injective", "self-injective")] {
        for side in ["right", "left"] {
            let b = v["report"][format!("{key}_{side}")].as_bool().unwrap();
            let want = format!("\n{label} ({side}): {}", if b { "YES" } else { "NO" });
            assert!(text.contains(&want), "{want}");
        }
    }
}

#[test]
fn several_files_give_an_array() {
    let v = json(&["analyze", "examples/T2.alg", "examples/R4.alg", "--json"]);
    assert_eq!(v.as_array().map(Vec::len), Some(2));
}

#[test]
fn field_override() {
    let v = json(&["analyze", "examples/T2.alg", "--json", "--field-override", "GF(7)"]);
    assert_eq!(v["algebra"]["field"], "GF(7)");
}

#[test]
fn missing_file_exits_2() {
    let out = kaschlab(&["analyze", "nonexistent.alg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_error_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp(dir.path(), "bad.alg");
    std::fs::write(&bad, "algebra A over QQ {\n  basis a;\n  unit = ;\n}\n").unwrap();
    let out = kaschlab(&["analyze", "examples/T2.alg", &bad]);
    assert_eq!(out.status.code(), Some(2));
    // no partial output for the file that did parse
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.alg: 3:10:"));
}

#[test]
fn construct_triangular_matches_the_example() {
    let out = kaschlab(&["construct", "triangular", "2", "over", "QQ"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), std::fs::read_to_string(root().join("examples/T2.alg")).unwrap());
}

#[test]
fn constructed_a5_over_gf5_splits_kasch() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = tmp(dir.path(), "a5.alg");
    assert!(kaschlab(&["construct", "zoo", "A5", "over", "GF(5)", "-o", &a5]).status.success());
    let v = json(&["analyze", &a5, "--json"]);
    assert_eq!(v["report"]["kasch_right"], Value::Bool(true));
    assert_eq!(v["report"]["kasch_left"], Value::Bool(false));
}

#[test]
fn constructed_skew_group_algebra_is_right_dual_kasch() {
    let dir = tempfile::tempdir().unwrap();
    let rg = tmp(dir.path(), "rg.alg");
    assert!(kaschlab(&["construct", "skewgroup", "examples/DxD.alg", "swap", "-o", &rg]).status.success());
    let v = json(&["analyze", &rg, "--json"]);
    assert_eq!(v["report"]["dual_kasch_right"], Value::Bool(true));
}

#[test]
fn unknown_builder_exits_2() {
    let out = kaschlab(&["construct", "frobnicate", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown builder"));
}

#[test]
fn corpus_refuses_small_characteristic() {
    let out = kaschlab(&["corpus", "--field", "GF(5)", "--dim-max", "12"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn corpus_is_deterministic() {
    let a = kaschlab(&["corpus", "--count", "1", "--seed", "1"]);
    let b = kaschlab(&["corpus", "--count", "1", "--seed", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_json_summary() {
    let v = json(&["corpus", "--count", "3", "--seed", "2", "--json", "--duality-pairs", "2"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["route_disagreements"], 0);
}

#[test]
fn goldens_pass() {
    let out = kaschlab(&["goldens"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homalg::file::{parse, parse_str};
use serde_json::Value;
use tempfile::TempDir;

fn homalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn quaternion_ac_is_the_real_line() {
    let dir = TempDir::new().unwrap();
    let q = dir.path().join("quaternions.json");
    let out = homalg(&["cayley-dickson", "--levels", "2", "--gamma", "-1,-1", "-o", path_str(&q)]);
    assert!(out.status.success());
    let h = parse(&q).unwrap();
    let a = h.definition.algebra();
    assert_eq!(a.mul(&a.basis_element(1), &a.basis_element(2)), a.basis_element(3));

    let out = homalg(&["ac", path_str(&q), "--side", "two"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ac"]["dim"], 1);
    assert_eq!(v["ac"]["basis"][0], serde_json::json!(["1", "0", "0", "0"]));
}

#[test]
fn every_map_twists_the_zero_product() {
    let dir = TempDir::new().unwrap();
    let n2 = write(dir.path(), "zero2.json", r#"{"format_version":1,"field":"Q","dim":2,"structure":[]}"#);
    let v = json(&homalg(&["twist-space", path_str(&n2)]));
    assert_eq!(v["dim"], 4);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn one_sided_ac_reports_the_split() {
    let dir = TempDir::new().unwrap();
    // Projection algebra e_i e_j = e_j: every basis vector is a left unity and Ann^l is the
    // line spanned by e_0 - e_1.
    let p2 = write(
        dir.path(),
        "p2.json",
        r#"{"format_version":1,"field":"Q","dim":2,"structure":[[0,0,0,"1"],[1,0,0,"1"],[0,1,1,"1"],[1,1,1,"1"]]}"#,
    );
    let v = json(&homalg(&["ac", path_str(&p2), "--side", "left"]));
    assert_eq!(v["unital"], true);
    assert_eq!(v["ac"]["dim"], 2);
    assert_eq!(v["split"]["ac_unit"]["dim"], 1);
    assert_eq!(v["split"]["annihilator"]["dim"], 1);
    assert_eq!(v["split"]["split_ok"], true);
    let v = json(&homalg(&["ac", path_str(&p2), "--side", "right"]));
    assert_eq!(v["unital"], false);
    assert_eq!(v["idempotents"]["computed"], false);
}

#[test]
fn analyze_on_the_opposite_swaps_sides() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let out = homalg(&["random", "--dim", "3", "--field", "Fp:3", "--seed", "5", "--left-unital", "-o", path_str(&a)]);
    assert!(out.status.success());
    let op = dir.path().join("op.json");
    assert!(homalg(&["opposite", path_str(&a), "-o", path_str(&op)]).status.success());
    let ra = json(&homalg(&["analyze", path_str(&a)]));
    let rop = json(&homalg(&["analyze", path_str(&op)]));
    assert_eq!(ra["left"], rop["right"]);
    assert_eq!(ra["right"], rop["left"]);
    assert_eq!(ra["left"]["unital"], true);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    homalg(&["poly", "--degree", "3", "--with-constants", "-o", path_str(&a)]);
    let first = homalg(&["analyze", path_str(&a)]);
    let second = homalg(&["analyze", path_str(&a)]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    // Keys come out sorted.
    let text = String::from_utf8(first.stdout).unwrap();
    let top: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn constructions_emit_parseable_files() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let t = d.join("t.json");
    homalg(&["poly", "--degree", "4", "-o", path_str(&t)]);
    let plus = d.join("plus.json");
    assert!(homalg(&["unitalize", path_str(&t), "-o", path_str(&plus)]).status.success());
    assert_eq!(parse(&plus).unwrap().definition.algebra().dim(), 5);
    let y = d.join("y.json");
    assert!(homalg(&["yau", path_str(&t), "--left-mult", "0", "-o", path_str(&y)]).status.success());
    let doc = parse(&y).unwrap();
    assert_eq!(doc.definition.kind(), "hom-algebra");
    assert_eq!(doc.meta["yau_criterion"]["hom_associative"], true);
    // Round trip through the twist grid.
    let again = d.join("again.json");
    assert!(homalg(&["yau", path_str(&y), "--twist-from-file", "-o", path_str(&again)]).status.success());
    parse(&again).unwrap();
}

#[test]
fn random_files_regenerate_from_their_metadata() {
    let out = homalg(&["random", "--dim", "3", "--field", "Q", "--seed", "9", "--commutative"]);
    let doc = parse_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let cfg = homalg::file::generator_from_meta(&doc.meta["generator"]).unwrap();
    let again = homalg_core::constructions::random_algebra(&cfg).unwrap();
    assert_eq!(&again, doc.definition.algebra());
    assert!(again.is_commutative());
}

#[test]
fn leibniz_report_with_a_twist_grid() {
    let dir = TempDir::new().unwrap();
    // Leib2: [y, y] = x.
    let l = write(dir.path(), "leib2.json", r#"{"format_version":1,"field":"Q","dim":2,"structure":[[1,1,0,"1"]]}"#);
    let out = homalg(&["leibniz", path_str(&l), "--twist", r#"[["1","0"],["0","1"]]"#]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["right"]["holds"], true);
    assert_eq!(v["hom_unities"]["space"]["dim"], 2);
    assert_eq!(v["twisted"]["hom_lie"]["holds"], false);
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"format_version\": 1,\n\"field\": ");
    let out = homalg(&["analyze", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert!(out.stdout.is_empty());

    let dup = write(dir.path(), "dup.json", r#"{"format_version":1,"field":"Q","dim":1,"structure":[[0,0,0,"1"],[0,0,0,"1"]]}"#);
    assert_eq!(homalg(&["analyze", path_str(&dup)]).status.code(), Some(2));
    assert_eq!(homalg(&["ac", path_str(&dup)]).status.code(), Some(2));
    assert_eq!(homalg(&["random", "--dim", "2", "--field", "Fp:4", "--seed", "0"]).status.code(), Some(2));

    let big = Command::new(env!("CARGO_BIN_EXE_homalg"))
        .args(["cayley-dickson", "--levels", "3"])
        .env("HOMALG_MAX_DIM", "4")
        .output()
        .unwrap();
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&big.stderr).contains("HOMALG_MAX_DIM"));
}

/// The generated corpus contains characteristic-2 Leibniz algebras whose hom-unities are not
/// 3-nilpotent, so an honest run exits 1. Anything else failing would be a real regression.
#[test]
fn campaign_over_generated_algebras() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    let report = dir.path().join("report.json");
    let out = homalg(&["campaign", "--dir", path_str(&corpus), "--seeds", "200", "--report", path_str(&report)]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["corpus_files"], 0);
    assert_eq!(v["entries"].as_array().unwrap().len(), 200);
    assert!(v["generator_algorithm"].as_str().unwrap().contains("ChaCha8"));
    let failures: Vec<&Value> = v["entries"].as_array().unwrap().iter().flat_map(|e| e["failures"].as_array().unwrap()).collect();
    assert!(!failures.is_empty());
    for f in &failures {
        assert!(f["name"].as_str().unwrap().contains("triple product"), "{f}");
        assert!(f["detail"].as_str().unwrap().contains("characteristic 2"), "{f}");
    }
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn campaign_orders_corpus_entries_by_path() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    std::fs::create_dir(d.join("sub")).unwrap();
    homalg(&["poly", "--degree", "2", "-o", path_str(&d.join("sub/b.json"))]);
    homalg(&["cayley-dickson", "--levels", "1", "-o", path_str(&d.join("c.json"))]);
    homalg(&["random", "--dim", "2", "--field", "Fp:5", "--seed", "1", "--left-unital", "-o", path_str(&d.join("a.json"))]);
    let first = homalg(&["campaign", "--dir", path_str(d), "--seeds", "3"]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let second = homalg(&["campaign", "--dir", path_str(d), "--seeds", "3"]);
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    let sources: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["source"].as_str().unwrap()).collect();
    assert_eq!(sources, ["a.json", "c.json", "sub/b.json", "generated/0", "generated/1", "generated/2"]);
}

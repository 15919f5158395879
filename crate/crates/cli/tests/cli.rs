use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn front(name: &str) -> String {
    corpus().join(format!("{name}.front")).to_string_lossy().into_owned()
}

fn legkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legkit")).args(args).output().expect("legkit runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_front(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn unknot_ruling_polynomial_is_one() {
    let out = legkit(&["poly", "--which", "ruling", &front("unknot")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn trefoil_invariants() {
    let out = legkit(&["invariants", &front("trefoil")]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["beta"], 1);
    assert_eq!((v["c"].as_i64(), v["cr"].as_i64(), v["w"].as_i64()), (Some(2), Some(3), Some(3)));
}

#[test]
fn orientation_flag_overrides_header() {
    let out = legkit(&["invariants", "--orient", "1=+,2=+", &front("hopf")]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["w"], -2);
    let out = legkit(&["invariants", &front("hopf")]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["w"], 2);
}

#[test]
fn verify_corpus_agrees_for_every_theorem() {
    for theorem in ["3.1", "4.1", "corollaries"] {
        let out = legkit(&["verify", "--theorem", theorem, &corpus().to_string_lossy()]);
        assert!(out.status.success(), "{theorem}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("0 disagreeing\n"));
    }
}

#[test]
fn verify_json_report() {
    let out = legkit(&["verify", "--json", &corpus().to_string_lossy()]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["all_agree"], true);
    let ids: Vec<&str> = v["fronts"].as_array().unwrap().iter().map(|f| f["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.len() >= 10);
    let trefoil = v["fronts"].as_array().unwrap().iter().find(|f| f["id"] == "trefoil").unwrap();
    assert_eq!(trefoil["R"], "z^2 + 2");
    assert_eq!(trefoil["agreement"]["r_equals_b_leg"], true);
    assert!(trefoil.get("millis").is_none());
}

#[test]
fn output_is_reproducible() {
    let dir = corpus().to_string_lossy().into_owned();
    for args in [
        vec!["verify", "--json", dir.as_str()],
        vec!["moves", "--random", "15", "--seed", "9", &front("figure8")],
        vec!["rulings", "--list", "--json", &front("torus2_5")],
    ] {
        assert_eq!(legkit(&args).stdout, legkit(&args).stdout, "{args:?}");
    }
}

#[test]
fn random_moves_preserve_the_ruling_polynomial() {
    let tmp = tempfile::tempdir().unwrap();
    let before = stdout(&legkit(&["poly", "--which", "ruling", &front("trefoil")]));
    for seed in ["1", "2", "3"] {
        let moved = stdout(&legkit(&["moves", "--random", "12", "--seed", seed, &front("trefoil")]));
        assert!(moved.starts_with("# moves: "));
        let p = write_front(&tmp, "moved.front", &moved);
        assert_eq!(stdout(&legkit(&["poly", "--which", "ruling", &p])), before);
        assert_eq!(stdout(&legkit(&["poly", "--which", "B-topo", &p])), before);
    }
}

#[test]
fn single_move_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let out = legkit(&["moves", "--apply", "type1-insert:2:above@1", &front("unknot")]);
    assert!(out.status.success(), "{}", stderr(&out));
    let p = write_front(&tmp, "m.front", &stdout(&out));
    assert_eq!(stdout(&legkit(&["poly", "--which", "ruling", &p])), "1\n");
    let listed = stdout(&legkit(&["moves", "--list", &p]));
    assert!(listed.lines().any(|l| l == "type1-remove@1"), "{listed}");
}

#[test]
fn stabilization_drops_beta_and_kills_rulings() {
    let tmp = tempfile::tempdir().unwrap();
    let out = legkit(&["stabilize", "--site", "1:1", "--flavor", "down", &front("trefoil")]);
    assert!(out.status.success(), "{}", stderr(&out));
    let p = write_front(&tmp, "s.front", &stdout(&out));
    let v: Value = serde_json::from_str(&stdout(&legkit(&["invariants", &p]))).unwrap();
    assert_eq!(v["beta"], 0);
    for which in ["ruling", "B-leg", "B-topo"] {
        assert_eq!(stdout(&legkit(&["poly", "--which", which, &p])), "0\n");
    }
}

#[test]
fn trace_is_json_lines() {
    let out = legkit(&["poly", "--which", "B-leg", "--trace", &front("torus2_5")]);
    assert_eq!(stdout(&out), "z^4 + 4*z^2 + 3\n");
    let lines: Vec<Value> = stderr(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    for l in &lines {
        assert!(l["rule"].is_string());
        assert!(l["measure"]["L"].is_u64() && l["measure"]["N2"].is_u64());
    }
}

#[test]
fn every_poly_kind_runs() {
    let kinds = ["ruling", "oruling", "B-leg", "B-topo", "Q", "kauffman", "homfly"];
    let values: Vec<String> = kinds
        .iter()
        .map(|k| stdout(&legkit(&["poly", "--which", k, &front("trefoil")])))
        .collect();
    assert_eq!(values[0], values[2]);
    assert_eq!(values[2], values[3]);
    assert_eq!(values[1], values[4]);
    // a P+ - a^-1 P- = z P0 here, so the usual right trefoil value
    // 2v^2 - v^4 + z^2 v^2 appears with v = a^-1
    assert_eq!(values[6], "z^2*a^-2 + 2*a^-2 - a^-4\n");
}

#[test]
fn parse_errors_carry_position() {
    let tmp = tempfile::tempdir().unwrap();
    let p = write_front(&tmp, "bad.front", "# comment\nl1 x1\n  r5\n");
    let out = legkit(&["validate", &p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[INVALID_FRONT]"), "{}", stderr(&out));
    assert!(stderr(&out).contains("line 3, column 3"), "{}", stderr(&out));

    let p = write_front(&tmp, "tok.front", "l1 y2 r1\n");
    let err = stderr(&legkit(&["validate", &p]));
    assert!(err.starts_with("error[PARSE_ERROR]") && err.contains("line 1, column 4"), "{err}");

    let p = write_front(&tmp, "open.front", "l1 l1 r1\n");
    assert!(stderr(&legkit(&["validate", &p])).starts_with("error[NOT_CLOSED]"));
}

#[test]
fn large_inputs_need_force() {
    let tmp = tempfile::tempdir().unwrap();
    let word = format!("l1 l3 {} r1 r1\n", vec!["x2"; 15].join(" "));
    let p = write_front(&tmp, "big.front", &word);
    let out = legkit(&["poly", "--which", "ruling", &p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[TOO_LARGE]"));
    let out = legkit(&["poly", "--which", "ruling", "--force", &p]);
    assert!(out.status.success());
}

#[test]
fn fuel_exhaustion_is_reported_verbatim() {
    let out = Command::new(env!("CARGO_BIN_EXE_legkit"))
        .args(["poly", "--which", "B-leg", &front("torus2_5")])
        .env("LEGSKEIN_FUEL", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[FUEL_EXHAUSTED]"), "{}", stderr(&out));
}

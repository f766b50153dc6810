use std::process::{Command, Output};

use serde_json::Value;

fn pillow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pillow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn characters_text_and_json() {
    let o = pillow(&["characters", "--family", "k3", "--g", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("b=48 n=840 k=168 t=72"));

    let o = pillow(&["characters", "--family", "veronese", "--r", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["characters"], serde_json::json!({"b": 0, "n": 0, "k": 0, "t": 0}));
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
    assert_eq!(v["exit_code"], 0);
}

#[test]
fn custom_matches_constructor() {
    let custom = pillow(&[
        "characters", "--family", "custom", "--d", "4", "--kh", "-6", "--k2", "9", "--euler", "3",
        "--format", "json",
    ]);
    let family = pillow(&["characters", "--family", "veronese", "--r", "2", "--format", "json"]);
    let c: Value = serde_json::from_slice(&custom.stdout).unwrap();
    let f: Value = serde_json::from_slice(&family.stdout).unwrap();
    assert_eq!(c["result"]["characters"], f["result"]["characters"]);
    assert_eq!(c["checks"], f["checks"]);
}

#[test]
fn characters_exit_codes() {
    assert_eq!(pillow(&["characters", "--family", "delpezzo", "--d", "10"]).status.code(), Some(2));
    assert_eq!(pillow(&["characters", "--family", "veronese", "--r", "0"]).status.code(), Some(2));
    assert_eq!(pillow(&["characters", "--family", "nonsense"]).status.code(), Some(2));
    // Negative cusp count: outside the nodes-and-cusps regime.
    let o = pillow(&[
        "characters", "--family", "custom", "--d", "1", "--kh", "-3", "--k2", "9", "--euler", "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pillow_verify_summary() {
    let o = pillow(&["pillow", "--a", "2", "--b", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("V=10 E=24 F=16 g=9; disjoint pairs 174 = formula 174; all checks pass"),
        "{out}"
    );
}

#[test]
fn pillow_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p33.dot");
    let o = pillow(&["pillow", "--a", "3", "--b", "3", "--export", "dot", "--out", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    let nodes = text.lines().filter(|l| !l.contains(" -- ") && l.contains("[label=")).count();
    assert_eq!(nodes, 36);

    let json = dir.path().join("p23.json");
    let o = pillow(&["pillow", "--a", "2", "--b", "3", "--export", "json", "--out", json.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["artifacts"][0], json.to_str().unwrap());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!((doc["a"].as_u64(), doc["b"].as_u64(), doc["g"].as_u64()), (Some(2), Some(3), Some(13)));
    assert_eq!(doc["lines"].as_array().unwrap().len(), 36);
    let first = &doc["lines"][0];
    for key in ["u", "v", "kind", "side"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    let tri = &doc["triangles"][0];
    for key in ["v1", "v2", "v3", "side", "row", "col", "half"] {
        assert!(tri.get(key).is_some(), "{key}");
    }

    let o = pillow(&["pillow", "--a", "2", "--b", "2", "--export", "dot", "--graph", "lines"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph pillow_2_2_lines {"));
}

#[test]
fn pillow_io_failure() {
    let o = pillow(&["pillow", "--a", "2", "--b", "2", "--export", "json", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn table_outputs() {
    let o = pillow(&["table", "--a", "2", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("2-points    |    174 |             0 |     4 |     0"), "{out}");

    let o = pillow(&["table", "--a", "2", "--b", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["totals"], serde_json::json!({"branch": 96, "nodes": 2112, "cusps": 264}));
    let types: Vec<&str> = v["result"]["rows"].as_array().unwrap().iter().map(|r| r["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["lines", "three_points", "six_points", "two_points"]);
}

#[test]
fn verify_sweeps() {
    let o = pillow(&["verify", "--a", "2..4", "--b", "2..4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches(" ok").count(), 9 + 1, "{out}");
    assert!(!out.contains("FAIL"));

    assert_eq!(pillow(&["verify", "--a", "2..2", "--b", "2..2"]).status.code(), Some(0));
    assert_eq!(pillow(&["verify", "--a", "3..2", "--b", "2..2"]).status.code(), Some(2));
}

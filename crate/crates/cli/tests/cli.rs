use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .env("RAINBOW_CACHE", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(cache: &Path, args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(cache, &all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn cache_file() -> (TempDir, std::path::PathBuf) {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("cache.jsonl");
    (dir, p)
}

#[test]
fn enumerate_counts() {
    let (_d, c) = cache_file();
    assert_eq!(json(&c, &["enumerate", "--graph", "C6", "--n", "3"]).0["count"], 2);
    assert_eq!(json(&c, &["enumerate", "--graph", "C7", "--n", "3", "--jump", "2"]).0["count"], 7);
    assert_eq!(json(&c, &["enumerate", "--graph", "P1", "--n", "2"]).0["count"], 0);
    let (v, _) = json(&c, &["enumerate", "--graph", "P5", "--n", "3"]);
    assert_eq!(v["sets"], serde_json::json!([[1, 3, 5]]));
}

#[test]
fn fvalue_known_values() {
    let (_d, c) = cache_file();
    for (g, n, m, f) in [("C7", "3", "3", 3), ("C8", "4", "4", 7), ("C4+C4", "4", "3", 3), ("C5", "2", "2", 2)] {
        let (v, code) = json(&c, &["fvalue", "--graph", g, "--n", n, "--m", m]);
        assert_eq!(v["f_value"], f, "{g}");
        assert_eq!(code, 0);
    }
}

#[test]
fn cache_is_reused_and_recompute_bypasses_it() {
    let (_d, c) = cache_file();
    let args = ["fvalue", "--graph", "C6", "--n", "3", "--m", "3"];
    assert_eq!(json(&c, &args).0["cached"], false);
    assert_eq!(json(&c, &args).0["cached"], true);
    let mut again = args.to_vec();
    again.push("--recompute");
    assert_eq!(json(&c, &again).0["cached"], false);
    let lines = std::fs::read_to_string(&c).unwrap();
    for line in lines.lines() {
        let r: Value = serde_json::from_str(line).unwrap();
        for key in ["graph", "n", "m", "f", "witness", "stats", "version"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    assert!(run(&c, &["cache", "clear"]).status.success());
    assert_eq!(json(&c, &["cache", "show"]).0, serde_json::json!([]));
}

#[test]
fn level_cap_is_inconclusive() {
    let (_d, c) = cache_file();
    let (v, code) = json(&c, &["fvalue", "--graph", "C8", "--n", "4", "--m", "4", "--level-cap", "4"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"]["kind"], "level_cap");
    assert_eq!(v["f_value"], 5);
}

#[test]
fn verify_claims() {
    let (_d, c) = cache_file();
    let (v, code) = json(&c, &["verify", "--claim", "prop-1.3", "--n", "2..3"]);
    assert_eq!(code, 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 2);
    let (_, code) = json(&c, &["verify", "--claim", "conj-1.2", "--n", "2..3", "--t", "5..7"]);
    assert_eq!(code, 0);
    let (_, code) = json(&c, &["verify", "--claim", "THM-1.4", "--n", "3", "--t", "7..9"]);
    assert_eq!(code, 0);
}

#[test]
fn table_and_json_agree() {
    let (_d, c) = cache_file();
    let out = run(&c, &["verify", "--claim", "prop-1.3", "--n", "2..3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let (v, _) = json(&c, &["verify", "--claim", "prop-1.3", "--n", "2..3"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), v["cells"].as_array().unwrap().len());
    for (row, cell) in rows.iter().zip(v["cells"].as_array().unwrap()) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[0], cell["graph"].as_str().unwrap());
        assert_eq!(cols[4], cell["observed"].to_string());
    }
}

#[test]
fn solve_writes_checkable_certificates() {
    let (d, c) = cache_file();
    let cert = d.path().join("cert.json");
    let cert_s = cert.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["gris", "--graph", "P6", "--collection", "[[1,3,5],[2,4,6],[1,4,6]]"],
        vec!["path", "--graph", "P5", "--n", "2", "--collection", "[[1,3],[2,4],[3,5]]"],
        vec!["cycle", "--graph", "C6", "--n", "3", "--collection", "[[1,3,5],[2,4,6],[1,3,5]]"],
        vec!["two-jump", "--graph", "C9", "--starts", "1,1,3,3"],
        vec!["two-regular", "--graph", "C4+C4", "--n", "4", "--collection", "[[1,3,5,7],[2,4,6,8],[1,3,6,8]]"],
        vec!["find-rainbow", "--graph", "C6", "--m", "2", "--collection", "[[1,3,5],[1,3,5]]"],
    ];
    for case in cases {
        let mut args = vec!["solve"];
        args.extend(&case);
        args.extend(["--out", cert_s]);
        let (v, code) = json(&c, &args);
        assert_eq!(code, 0, "{case:?}");
        for key in ["graph", "ordering", "collection", "rainbow", "greedy_colors", "trace", "version"] {
            assert!(v.get(key).is_some(), "{case:?} missing {key}");
        }
        let check = run(&c, &["check", cert_s]);
        assert!(check.status.success(), "{case:?}");
    }
}

#[test]
fn tampered_certificate_is_refuted() {
    let (d, c) = cache_file();
    let cert = d.path().join("cert.json");
    let out = run(&c, &["solve", "gris", "--graph", "P4", "--collection", "[[1,3],[2,4]]", "--out", cert.to_str().unwrap()]);
    assert!(out.status.success());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    v["rainbow"] = serde_json::json!([[1, 1], [2, 2]]);
    std::fs::write(&cert, v.to_string()).unwrap();
    assert_eq!(run(&c, &["check", cert.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn collection_from_file() {
    let (d, c) = cache_file();
    let f = d.path().join("f.json");
    std::fs::write(&f, "[[1,3,5],[2,4,6]]").unwrap();
    let arg = format!("@{}", f.display());
    let (v, code) = json(&c, &["solve", "gris", "--graph", "P6", "--collection", &arg]);
    assert_eq!(code, 0);
    assert_eq!(v["collection"], serde_json::json!([[1, 3, 5], [2, 4, 6]]));
}

#[test]
fn input_errors_exit_3() {
    let (_d, c) = cache_file();
    assert_eq!(run(&c, &["enumerate", "--graph", "Q7", "--n", "2"]).status.code(), Some(3));
    assert_eq!(run(&c, &["fvalue", "--graph", "C6", "--n", "2", "--m", "3"]).status.code(), Some(3));
    assert_eq!(run(&c, &["verify", "--claim", "nope"]).status.code(), Some(3));
    assert_eq!(run(&c, &["solve", "gris", "--graph", "P4", "--collection", "[[1,2]]"]).status.code(), Some(3));
    assert_eq!(run(&c, &["--help"]).status.code(), Some(0));
}

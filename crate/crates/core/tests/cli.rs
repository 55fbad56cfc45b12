use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::tempdir;

use semigroup_ranks::brandt::build_brandt;
use semigroup_ranks::par::SearchConfig;
use semigroup_ranks::ranks::{rank_report, RankSelection};

fn semirank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semirank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn brandt_emits_table() {
    for (n, size) in [(2, 5), (3, 10)] {
        let o = semirank(&["brandt", "--n", &n.to_string()]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert_eq!(text.lines().next(), Some(size.to_string().as_str()));
        assert_eq!(text.lines().count(), size + 2);
        assert!(String::from_utf8_lossy(&o.stderr).contains(&format!("|B_{n}| = {size}")));
    }
}

#[test]
fn brandt_rejects_zero() {
    let o = semirank(&["brandt", "--n", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn ranks_json_for_end_b2() {
    let o = semirank(&["ranks", "--n", "2", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(
        v["ranks"],
        serde_json::json!({"r1": 1, "r2": 3, "r3": 3, "r4": 4, "r5": 5})
    );
    assert_eq!(v["budget_exhausted"], false);
    for key in ["n", "ranks", "certificates", "methods", "budget_exhausted"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn ranks_of_end_b1_are_all_three() {
    let o = semirank(&["ranks", "--n", "1", "--json"]);
    let v = json(&o);
    for k in 1..=5 {
        assert_eq!(v["ranks"][format!("r{k}")], 3);
    }
}

#[test]
fn ranks_which_filter() {
    let v = json(&semirank(&[
        "ranks", "--n", "3", "--which", "r2,r5", "--json",
    ]));
    assert_eq!(v["ranks"]["r2"], 4);
    assert_eq!(v["ranks"]["r5"], 10);
    assert!(v["ranks"]["r1"].is_null());
}

#[test]
fn brandt_table_round_trips_through_ranks() {
    let dir = tempdir().unwrap();
    for n in 1..=3u32 {
        let path = dir.path().join(format!("b{n}.tbl"));
        let o = semirank(&[
            "brandt",
            "--n",
            &n.to_string(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(&format!("|B_{n}|")));
        let from_file = json(&semirank(&[
            "ranks",
            "--table",
            path.to_str().unwrap(),
            "--json",
        ]));
        let in_memory = rank_report(
            &build_brandt(n).unwrap(),
            None,
            &SearchConfig::default(),
            RankSelection::all(),
        )
        .unwrap()
        .to_json();
        assert_eq!(from_file, serde_json::to_value(in_memory).unwrap());
    }
}

#[test]
fn ranks_needs_exactly_one_source() {
    assert_eq!(semirank(&["ranks"]).status.code(), Some(1));
    assert_eq!(
        semirank(&["ranks", "--n", "2", "--table", "x.tbl"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn ranks_reports_violating_triple() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("bad.tbl");
    fs::write(&path, "2\n1 0\n0 0\n").unwrap();
    let o = semirank(&["ranks", "--table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains('0') && err.contains('1'), "{err}");
}

#[test]
fn malformed_table_is_an_error() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("bad.tbl");
    fs::write(&path, "2\n0 1\n").unwrap();
    assert_eq!(
        semirank(&["ranks", "--table", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        semirank(&["ranks", "--table", "/nonexistent/t.tbl"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn budget_must_be_positive() {
    assert_eq!(
        semirank(&["ranks", "--n", "2", "--budget", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        semirank(&["ranks", "--n", "2", "--budget", "-3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn help_documents_default_budget() {
    let o = semirank(&["ranks", "--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("60"));
}

#[test]
fn tiny_budget_flags_bounds_and_exits_zero() {
    let o = semirank(&[
        "ranks", "--n", "5", "--which", "r4", "--budget", "0.001", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["budget_exhausted"], true);
    assert_eq!(v["bounds"]["r4"], "lower");
}

#[test]
fn verify_passes_for_small_n() {
    for n in ["2", "3"] {
        let o = semirank(&["verify", "--n", n]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.lines().count() >= 10);
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    }
}

#[test]
fn verify_skips_oracle_for_n4() {
    let o = semirank(&["verify", "--n", "4", "--json"]);
    assert!(o.status.success());
    let checks = json(&o);
    let checks = checks.as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "FAIL"));
    let oracle = checks
        .iter()
        .find(|c| c["name"].as_str().unwrap().contains("oracle"))
        .unwrap();
    assert_eq!(oracle["status"], "SKIPPED");
    assert!(checks.iter().filter(|c| c["status"] == "PASS").count() >= 10);
}

#[test]
fn conjecture_confirmed_for_small_n() {
    for n in ["2", "3"] {
        let o = semirank(&["conjecture", "--n", n, "--json"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["verdict"], "confirmed");
    }
    assert_eq!(semirank(&["conjecture", "--n", "1"]).status.code(), Some(1));
}

#[test]
fn endo_writes_table_and_sidecar() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("end3.tbl");
    let o = semirank(&[
        "endo",
        "--n",
        "3",
        "--oracle",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("|End(B_3)| = 10"));
    let table = fs::read_to_string(&path).unwrap();
    assert_eq!(table.lines().next(), Some("10"));
    let side: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("end3.tbl.json")).unwrap())
            .unwrap();
    assert_eq!(side["elements"].as_array().unwrap().len(), 10);
    let ranks = json(&semirank(&[
        "ranks",
        "--table",
        path.to_str().unwrap(),
        "--json",
    ]));
    assert_eq!(ranks["ranks"]["r3"], 4);
    assert_eq!(
        semirank(&["endo", "--n", "4", "--oracle"]).status.code(),
        Some(1)
    );
}

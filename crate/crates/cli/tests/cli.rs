use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfsurgery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hfsurgery-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn rank_both_on_trefoil() {
    let out = run(&["rank", "trefoil_rh", "-p", "1", "-q", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("oracle=1 formula=1"));
}

#[test]
fn scan_unknot_grid() {
    let out = run(&["scan", "unknot", "--pmax", "4", "--qmax", "4", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().split('\t').count(), 10);
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 11);
    for row in &rows {
        assert_eq!(row[3], row[1], "oracle equals p");
        assert_eq!(row[4], row[1], "formula equals p");
    }
    let order: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r[1].parse().unwrap(), r[2].parse().unwrap()))
        .collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
}

#[test]
fn scan_tsv_and_json_agree() {
    let tsv = stdout(&run(&["scan", "figure_eight", "--pmax", "3", "--qmax", "3"]));
    let json = stdout(&run(&[
        "scan",
        "figure_eight",
        "--pmax",
        "3",
        "--qmax",
        "3",
        "--format",
        "json",
    ]));
    let tsv_rows: Vec<Vec<String>> = tsv
        .lines()
        .skip(1)
        .map(|l| l.split('\t').map(String::from).collect())
        .collect();
    let json_rows: Vec<serde_json::Value> =
        json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(tsv_rows.len(), json_rows.len());
    let cell = |v: &serde_json::Value| match v {
        serde_json::Value::Null => "-".to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let keys = ["name", "p", "q", "oracle", "formula", "t", "nu", "hypothesis", "b", "genus"];
    for (t, j) in tsv_rows.iter().zip(&json_rows) {
        let from_json: Vec<String> = keys.iter().map(|k| cell(&j[k])).collect();
        assert_eq!(t, &from_json);
    }
}

#[test]
fn complement_on_figure_eight() {
    let out = run(&["complement", "figure_eight", "-q", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "obstructed");
    assert_eq!(v["ranks"], serde_json::json!([5, 1]));
    let text = stdout(&run(&["complement", "unknot", "-q", "3"]));
    assert!(text.starts_with("consistent"));
}

#[test]
fn cosmetic_verdicts() {
    let text = stdout(&run(&["cosmetic", "trefoil_rh", "1/1", "1/2"]));
    assert!(text.starts_with("obstructed"));
    let text = stdout(&run(&["cosmetic", "trefoil_rh", "2", "3"]));
    assert!(text.starts_with("not_applicable"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["rank", "unknot", "-p", "2", "-q", "4"],
        vec!["rank", "unknot", "-p", "1"],
        vec!["cosmetic", "unknot", "1/0", "1/2"],
        vec!["rank", "no_such_knot", "-p", "1", "-q", "1"],
        vec!["frobnicate"],
        vec!["gen", "staircase", "1,2"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn validate_reports_issues() {
    assert_eq!(run(&["validate", "figure_eight"]).status.code(), Some(0));
    let bad = scratch(
        "bad.json",
        r#"{"name":"bad","generators":[{"id":"a","alexander":0},{"id":"b","alexander":0}],
            "differential":[{"from":"a","to":"b","upower":0}],
            "flip":[{"from":"a","to":"a"}]}"#,
    );
    let out = run(&["validate", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let kinds: Vec<&str> = report["issues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"not_reduced"));
    assert!(kinds.contains(&"flip_missing"));
    assert_eq!(run(&["rank", bad.to_str().unwrap(), "-p", "1", "-q", "1"]).status.code(), Some(1));
    let garbage = scratch("garbage.json", "{ not json");
    assert_eq!(run(&["validate", garbage.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn generated_files_round_trip() {
    let json = stdout(&run(&["gen", "builtin", "t25"]));
    let path = scratch("t25.json", &json);
    let file = path.to_str().unwrap();
    assert_eq!(run(&["validate", file]).status.code(), Some(0));
    for (p, q) in [("1", "1"), ("3", "2"), ("7", "3")] {
        let from_file = stdout(&run(&["rank", file, "-p", p, "-q", q, "--format", "tsv"]));
        let builtin = stdout(&run(&["rank", "t25", "-p", p, "-q", q, "--format", "tsv"]));
        assert_eq!(from_file, builtin);
    }
    let a = stdout(&run(&["gen", "random", "--seed", "3", "--dots", "2"]));
    let b = stdout(&run(&["gen", "random", "--seed", "3", "--dots", "2"]));
    assert_eq!(a, b);
    let random = scratch("random.json", &a);
    let out = run(&["scan", random.to_str().unwrap(), "--pmax", "3", "--qmax", "3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn staircase_and_mirror_generation() {
    let stair = scratch("stair.json", &stdout(&run(&["gen", "staircase", "1,1"])));
    let out = stdout(&run(&["rank", stair.to_str().unwrap(), "-p", "1", "-q", "2"]));
    assert!(out.contains("oracle=3 formula=3"));
    let lh = scratch("lh.json", &stdout(&run(&["gen", "mirror", "trefoil_rh"])));
    let info: serde_json::Value = serde_json::from_str(&stdout(&run(&[
        "info",
        lh.to_str().unwrap(),
        "--format",
        "json",
    ])))
    .unwrap();
    assert_eq!(info["nu"], 0);
    assert_eq!(info["genus"], 1);
    assert_eq!(info["hypothesis"], true);
}

#[test]
fn info_text() {
    let text = stdout(&run(&["info", "figure_eight"]));
    assert!(text.contains("genus\t1"));
    assert!(text.contains("hfk\t-1:1 0:3 1:1"));
    assert!(text.contains("nu\t0"));
    assert!(text.contains("hypothesis\tpass"));
}

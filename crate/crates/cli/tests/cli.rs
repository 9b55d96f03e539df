use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_salemforge"));
    c.env_remove("SALEMFORGE_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("salemforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn census(workers: &str, format: &str) -> Vec<u8> {
    let out = bin().env("SALEMFORGE_WORKERS", workers).args(["census", "--n-max", "4", "--format", format]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

#[test]
fn census_is_deterministic_and_formats_agree() {
    let csv1 = census("1", "csv");
    assert_eq!(csv1, census("3", "csv"));
    let json1 = census("1", "json");
    assert_eq!(json1, census("2", "json"));

    let rows: Vec<serde_json::Value> = serde_json::from_slice(&json1).unwrap();
    let mut reader = csv::Reader::from_reader(csv1.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(&rows) {
        for (k, cell) in header.iter().zip(rec.iter()) {
            let v = &row[k.as_str()];
            let as_text = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Array(a) => a.iter().map(|x| x.as_str().unwrap()).collect::<Vec<_>>().join(" "),
                other => other.to_string(),
            };
            assert_eq!(cell, as_text, "{k}");
        }
    }

    // lexicographic (n, l, m)
    let keys: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["l"].as_u64().unwrap(), r["m"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    for r in &rows {
        let (l, m, n) = (r["l"].as_u64().unwrap(), r["m"].as_u64().unwrap(), r["n"].as_u64().unwrap());
        let lo: f64 = r["tau_lo"].as_str().unwrap().parse().unwrap();
        let hi: f64 = r["tau_hi"].as_str().unwrap().parse().unwrap();
        assert!(4.0 * n as f64 + 5.0 < lo && lo < hi && hi < (4 * n + m + l + 6) as f64);
        assert_eq!((r["circle_pairs"].as_u64(), r["real_pairs"].as_u64()), (Some(7), Some(2)));
        if n % 3 == 1 && ((l, m) == (0, n) || (l, m) == (n, 0)) {
            assert_eq!(r["irreducible"], true);
            assert_eq!(r["salem_class"], "2-salem");
        }
    }
}

#[test]
fn census_single_row_to_file() {
    let out = tmp("census.csv", "");
    let o = run(&["census", "--n-max", "0", "--skip-irreducibility", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("0,0,0,5.594257337613,"));
    assert!(lines[1].ends_with(",skipped,skipped,1 -6 3 -5 5 -1 9 0 11 -2 11 0 9 -1 5 -5 3 -6 1"));
}

#[test]
fn growth_of_triangle_group() {
    let o = run(&["growth", "triangle-2-3-7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let den: Vec<&str> = v["den"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(den, ["1", "1", "0", "-1", "-1", "-1", "-1", "-1", "0", "1", "1"]);
    assert_eq!(v["series"][1], "3");
    let graph = tmp("dihedral.txt", "nodes 2\ninf 1 2\n");
    let o = run(&["growth", graph.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn domino_and_usage_errors() {
    let o = run(&["domino", "--l", "3", "--m", "2", "--n", "7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["root_profile"]["circle_pairs"], 7);
    assert_eq!(run(&["domino", "--l", "3", "--m", "5", "--n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["domino", "--l", "3"]).status.code(), Some(2));
    assert_eq!(run(&["growth", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "/nonexistent/poly"]).status.code(), Some(2));
    let o = bin().env("SALEMFORGE_WORKERS", "0").args(["census", "--n-max", "0"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn polynomial_commands() {
    let d = tmp("d.txt", "1 -4 1 0 1 1 0 2 0 2 0 1 1 0 1 -4 1\n");
    let o = run(&["classify", d.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "2-salem");
    let o = run(&["cohn", d.to_str().unwrap(), "--mr-rounds", "16"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"]["n"], "186");

    // always even: no witness, a check failure
    let even = tmp("even.txt", "4 1 1");
    assert_eq!(run(&["cohn", even.to_str().unwrap(), "--scan", "50"]).status.code(), Some(1));

    let f = tmp("f.txt", "1 2 2 2 1");
    let o = run(&["factor", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let factors: Vec<Vec<&str>> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect())
        .collect();
    assert_eq!(factors, vec![vec!["1", "1"], vec!["1", "1"], vec!["1", "0", "1"]]);

    let bad = tmp("bad.txt", "1 x 2");
    assert_eq!(run(&["factor", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn geometry_verify_passes() {
    let o = run(&["geometry-verify"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["signature"], serde_json::json!([4, 1]));
    assert_eq!(v["gamma_star_isomorphic"], true);
}

#[test]
fn verify_paper_writes_report() {
    let report = tmp("report.json", "");
    let o = run(&["verify-paper", "--report", report.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(o.status.success(), "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("PASS")));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    let alpha = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "lehmer-salem").unwrap();
    assert!(alpha["data"]["alpha"]["lo"].as_str().unwrap().starts_with("1.17628"));
}

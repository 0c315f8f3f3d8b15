use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = schubert(args);
    (
        out.status.code().expect("exited"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn check_isomorphic_triple() {
    let (code, stdout, _) = run(&["--json", "check", &path("a4.json"), &path("b4.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verdict"], "isomorphic");
    assert_eq!(v["tau"]["1"], "4");
    let (code, _, _) = run(&["check", &path("b4.json"), &path("f4.json")]);
    assert_eq!(code, 0);
}

#[test]
fn check_not_isomorphic() {
    let (code, stdout, _) = run(&[
        "--json",
        "check",
        &path("m2_21_2.json"),
        &path("m3_21_2.json"),
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["witness"], "cartan_entry a[2][1]");
}

#[test]
fn check_identical_files() {
    let (code, _, _) = run(&["check", &path("m1_12.json"), &path("m1_12.json")]);
    assert_eq!(code, 0);
}

#[test]
fn check_empty_against_nonempty_parabolic() {
    let (code, stdout, _) = run(&[
        "--json",
        "check",
        &path("m1_12.json"),
        &path("m1_12_1.json"),
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("empty_vs_nonempty_parabolic"));
}

#[test]
fn surfaces_table_and_jsonl() {
    let (code, stdout, _) = run(&["surfaces"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 7);
    let total: usize = rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .nth(1)
                .unwrap()
                .parse::<usize>()
                .unwrap()
        })
        .sum();
    assert_eq!(total, 13);

    let (code, stdout, _) = run(&["--json", "surfaces"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0]["version"], env!("CARGO_PKG_VERSION"));
    assert!(lines[1..].iter().all(|r| r["class_label"].is_string()));

    let (code, _, _) = run(&["surfaces", "--verify"]);
    assert_eq!(code, 0);
}

#[test]
fn cohomology_square() {
    let (code, stdout, _) = run(&[
        "cohomology",
        &path("m2_21_2.json"),
        "--generator",
        "1",
        "--element",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "2·σ[s2,s1]");
    let (_, stdout, _) = run(&[
        "--json",
        "cohomology",
        &path("m2_21_2.json"),
        "--generator",
        "1",
        "--element",
        "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["product"]["[\"2\",\"1\"]"], 2);
}

#[test]
fn cohomology_rejects_parabolic_generator() {
    let (code, stdout, stderr) = run(&["cohomology", &path("m2_21_2.json"), "--generator", "2"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("parabolic"));
}

#[test]
fn interval_rows() {
    let (code, stdout, _) = run(&["interval", &path("m1_12_1.json")]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 4);
    let (_, stdout, _) = run(&["--json", "interval", &path("m1_12_1.json")]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
}

#[test]
fn roots_of_b2() {
    let (code, stdout, _) = run(&["--json", "roots", &path("b2_cartan.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let roots = v.as_array().unwrap();
    assert_eq!(roots.len(), 4);
    assert!(roots.iter().any(
        |r| r["root"] == serde_json::json!([1, 1]) && r["coroot"] == serde_json::json!([2, 1])
    ));
}

#[test]
fn enumerate_surfaces() {
    let (code, stdout, _) = run(&[
        "--json",
        "enumerate",
        "--max-rank",
        "2",
        "--max-length",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 15);
    let (code, _, stderr) = run(&["enumerate", "--max-rank", "5"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("rank"));
    let (code, stdout, _) = run(&["enumerate", "--classify"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("# max_rank=2 max_length=2: 14 data, 8 classes"));
}

#[test]
fn strict_and_normalized_input() {
    let dir = std::env::temp_dir().join(format!("schubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("long.json");
    std::fs::write(
        &file,
        r#"{"labels":["1","2"],"cartan":[[2,-1],[-2,2]],"word":["2","1","2"],"parabolic":["2"]}"#,
    )
    .unwrap();
    let f = file.to_string_lossy().into_owned();
    let (code, stdout, stderr) = run(&["--json", "check", &f, &path("m2_21_2.json")]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("minimal coset representative"));
    let (code, _, stderr) = run(&["--normalize", "check", &f, &path("m2_21_2.json")]);
    assert_eq!(code, 0);
    assert!(stderr.contains("normalized"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_are_not_verdict_codes() {
    let (code, _, _) = run(&["check"]);
    assert_eq!(code, 3);
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("surfaces"));
}

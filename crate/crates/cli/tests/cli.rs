use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn osa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osa"))
        .args(args)
        .env_remove("OSA_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn example() -> String {
    data("example.matrix").display().to_string()
}

#[test]
fn golden_outputs_are_byte_stable() {
    let ex = example();
    let cases: [(&str, Vec<&str>); 5] = [
        (
            "gb_natural.json",
            vec!["gb", &ex, "--order", "x y z t H P", "--json"],
        ),
        (
            "gb_hp.json",
            vec!["gb", &ex, "--order", "H P x y z t", "--json"],
        ),
        (
            "dims.json",
            vec!["dims", &ex, "--fields", "q,f2,f3,f5", "--json"],
        ),
        ("torsion.json", vec!["torsion", &ex, "--json"]),
        (
            "search.json",
            vec![
                "search",
                &ex,
                "--degree",
                "4",
                "--total",
                "--exhaustive",
                "--json",
            ],
        ),
    ];
    for (file, args) in cases {
        let first = stdout(&osa(&args));
        let second = stdout(&osa(&args));
        assert_eq!(first, second, "{file} differs between runs");
        let expected = golden(file);
        assert!(!expected.contains('\r'));
        assert_eq!(first, expected, "{file}");
    }
}

#[test]
fn gb_lists_three_elements_for_hp_order() {
    let v = json(&osa(&[
        "gb",
        &example(),
        "--order",
        "H P x y z t",
        "--json",
    ]));
    assert_eq!(v["result"]["size"], 3);
    assert_eq!(v["result"]["oracle_agrees"], true);
    let circuits: Vec<String> = v["result"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            e["circuit"]["labels"]
                .as_array()
                .unwrap()
                .iter()
                .map(|l| l.as_str().unwrap())
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    let mut circuits = circuits;
    circuits.sort();
    assert_eq!(circuits, ["xtHP", "xyztH", "yzHP"]);
}

#[test]
fn dims_of_free_matroid_are_binomial() {
    let v = json(&osa(&[
        "dims",
        &data("free4.circuits").display().to_string(),
        "--fields",
        "q,f2,f3",
        "--json",
    ]));
    let tables = v["result"]["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 3);
    for t in tables {
        let algebra: Vec<u64> = t["degrees"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d["algebra"].as_u64().unwrap())
            .collect();
        assert_eq!(algebra, [1, 4, 6, 4, 1]);
    }
}

#[test]
fn verify_reports_success_on_worked_example() {
    let v = json(&osa(&[
        "verify",
        &example(),
        "--degree",
        "4",
        "--fields",
        "q,f2,f3",
        "--json",
    ]));
    assert_eq!(v["result"]["proposition_verified"], true);
}

#[test]
fn verify_exits_two_when_the_minimum_overshoots() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("whirl.matrix");
    std::fs::write(&path, "6 3\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n1 0 1\n0 1 1\n").unwrap();
    let out = osa(&[
        "verify",
        path.to_str().unwrap(),
        "--degree",
        "3",
        "--fields",
        "q",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("false"));
}

#[test]
fn parses_all_formats() {
    let u23 = json(&osa(&[
        "circuits",
        &data("u23.circuits").display().to_string(),
        "--json",
    ]));
    assert_eq!(u23["matroid"]["rank"], 2);
    let k4 = json(&osa(&[
        "circuits",
        &data("k4.graph").display().to_string(),
        "--json",
    ]));
    assert_eq!(k4["matroid"]["n"], 6);
    assert_eq!(k4["matroid"]["circuits"].as_array().unwrap().len(), 7);
}

#[test]
fn malformed_input_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.circuits");
    std::fs::write(&path, "n 4\n1 2 3\n# note\n1 2 9\n").unwrap();
    let out = osa(&["circuits", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));

    let path = dir.path().join("parallel.matrix");
    std::fs::write(&path, "3 2\n1 0\n0 1\n2 0\n").unwrap();
    let out = osa(&["circuits", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let out = osa(&[
        "circuits",
        dir.path().join("missing.graph").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ground_set_cap_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_osa"))
        .args(["circuits", &example()])
        .env("OSA_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_osa"))
        .args(["circuits", &example()])
        .env("OSA_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn random_search_needs_a_seed_for_json() {
    let out = osa(&[
        "search",
        &example(),
        "--degree",
        "4",
        "--samples",
        "10",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("seed"));
    let args = [
        "search",
        &example(),
        "--degree",
        "4",
        "--samples",
        "10",
        "--seed",
        "3",
        "--json",
    ];
    let a = json(&osa(&args));
    assert_eq!(stdout(&osa(&args)), stdout(&osa(&args)));
    assert_eq!(a["strategy"]["seed"], 3);
    assert_eq!(a["strategy"]["samples"], 10);
}

#[test]
fn exhaustive_search_refuses_large_ground_sets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u39.circuits");
    let mut text = String::from("n 9\n");
    for c in 0u32..1 << 9 {
        if c.count_ones() == 4 {
            let idx: Vec<String> = (0..9)
                .filter(|i| c >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            text.push_str(&idx.join(" "));
            text.push('\n');
        }
    }
    std::fs::write(&path, text).unwrap();
    let out = osa(&["search", path.to_str().unwrap(), "--total", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("--samples") || stderr(&out).contains("random"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn report_round_trips_the_matroid_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = osa(&["report", &example(), "--json", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let written: Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let again = json(&osa(&["circuits", out_path.to_str().unwrap(), "--json"]));
    assert_eq!(written["matroid"], again["matroid"]);
    let direct = json(&osa(&["circuits", &example(), "--json"]));
    assert_eq!(written["matroid"], direct["matroid"]);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(osa(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(osa(&["--help"]).status.code(), Some(0));
    let out = osa(&["dims", &example(), "--fields", "f4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = osa(&["gb", &example(), "--order", "x y z t H"]);
    assert_eq!(out.status.code(), Some(1));
}

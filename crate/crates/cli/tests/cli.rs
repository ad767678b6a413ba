use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixedpoly")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (bool, Value) {
    let out = run(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.success(), json)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn roots_of_the_example_at_t_zero() {
    let (ok, rep) = report(&["roots", "--poly", "-2*z1^2*conj(z1)+1"]);
    assert!(ok);
    assert_eq!(rep["command"], "roots");
    let roots = rep["results"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0]["index"], 1);
    let re = roots[0]["estimate"][0].as_f64().unwrap();
    assert!((re - 2f64.powf(-1.0 / 3.0)).abs() < 1e-9);
    assert_eq!(rep["results"]["index_sum"], 1);
}

#[test]
fn degree_of_s1_agrees() {
    let (ok, rep) = report(&["degree", "--family", "s1", "--params", "q=2,r=1", "--trials", "10", "--seed", "7"]);
    assert!(ok);
    assert_eq!(rep["results"]["agree"], true);
    assert_eq!(rep["results"]["polar_degree"], 2);
    assert_eq!(rep["results"]["sections"].as_array().unwrap().len(), 10);
    assert_eq!(rep["inputs"]["seed"], 7);
}

#[test]
fn demo_passes_every_item() {
    let out = run(&["demo"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS example t=3"));
}

#[test]
fn reports_are_deterministic() {
    let a = scratch("degree_a.json");
    let b = scratch("degree_b.json");
    for path in [&a, &b] {
        let out = run(&["degree", "--family", "s2", "--params", "q=2,r=1", "--trials", "6", "--seed", "3", "--json", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn sequential_and_parallel_reports_match() {
    let args = ["scan", "--q", "1", "--r", "1", "--trials", "30", "--seed", "4"];
    let (_, par) = report(&args);
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    let (_, seq) = report(&seq_args);
    assert_eq!(par["results"], seq["results"]);
}

#[test]
fn analyze_reports_the_class() {
    let (ok, rep) = report(&["analyze", "--poly", "z1^3*conj(z1) + z2^3*conj(z2)"]);
    assert!(ok);
    assert_eq!(rep["results"]["class"]["q"], 2);
    assert_eq!(rep["results"]["class"]["r"], 1);
    assert_eq!(rep["results"]["strongly_polar_homogeneous"], true);
    assert_eq!(rep["inputs"]["canonical"], "z1^3*conj(z1) + z2^3*conj(z2)");
}

#[test]
fn lkn_of_k_ell() {
    let (ok, rep) = report(&["lkn", "--family", "k_ell", "--params", "l=2,beta=1+1i,gamma=(2-1i)"]);
    assert!(ok);
    assert_eq!(rep["results"]["count"], 4);
}

#[test]
fn invariants_of_a_member_and_a_table() {
    let (ok, rep) = report(&["invariants", "--family", "s1", "--params", "q=3,r=1"]);
    assert!(ok);
    assert_eq!(rep["results"]["chi_f"], 9);
    assert_eq!(rep["results"]["genus"], 1);

    let (ok, rep) = report(&["invariants", "--family", "h_join", "--q", "2", "--r", "3", "--q-max", "3"]);
    assert!(ok);
    assert_eq!(rep["results"]["attainable"]["2"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(rep["results"]["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn scan_histogram_stays_in_the_predicted_set() {
    let (ok, rep) = report(&["scan", "--q", "1", "--r", "1", "--trials", "40"]);
    assert!(ok);
    let hist = rep["results"]["histogram"].as_object().unwrap();
    assert!(hist.keys().all(|k| k == "1" || k == "3"));
    assert_eq!(rep["results"]["predicted"], serde_json::json!([1, 3]));
}

#[test]
fn svg_plots_each_root() {
    let path = scratch("roots.svg");
    let out = run(&["roots", "--poly", "-2*z1^2*conj(z1) + 3*z1^2 + 1", "--svg", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"width="800" height="800""#));
    assert_eq!(svg.matches("<circle").count(), 3);
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn errors_exit_one_with_a_structured_report() {
    let path = scratch("error.json");
    let out = run(&["analyze", "--poly", "2 z1", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let rep: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(rep["results"]["error"]["kind"], "Parse");

    let (ok, rep) = report(&["roots", "--poly", "z1 + z2"]);
    assert!(!ok);
    assert_eq!(rep["results"]["error"]["kind"], "NotOneVariable");

    let (ok, rep) = report(&["degree", "--family", "f_qj", "--params", "q=2,j=1"]);
    assert!(!ok);
    assert_eq!(rep["results"]["error"]["kind"], "AmbientDimension");
}

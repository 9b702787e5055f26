use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use soliton_cli::table::TableReport;
use tempfile::tempdir;

fn soliton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soliton"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_single_line_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "diagnostic should be one line: {err:?}");
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

#[test]
fn help_text_is_frozen() {
    let o = soliton(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("help.txt"));
    for sub in ["curve", "qform", "critical-length", "table", "cylinder", "mesh", "verify"] {
        let o = soliton(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(&format!("{sub}.txt")), "help for {sub}");
    }
}

#[test]
fn usage_errors_exit_one_with_one_line() {
    assert_single_line_error(&soliton(&[]), 1);
    assert_single_line_error(&soliton(&["bogus"]), 1);
    assert_single_line_error(&soliton(&["curve"]), 1);
    assert_single_line_error(&soliton(&["curve", "--lambda", "x"]), 1);
    assert_single_line_error(&soliton(&["curve", "--lambda", "1", "--samples", "1"]), 1);
    assert_single_line_error(&soliton(&["curve", "--lambda", "0"]), 1);
    assert_single_line_error(&soliton(&["critical-length", "--lambda", "1", "--radius", "1"]), 1);
    assert_single_line_error(&soliton(&["qform", "--lambda", "0.5", "--length", "3"]), 1);
    assert_single_line_error(&soliton(&["table", "--lambda", "2"]), 1);
    assert_single_line_error(&soliton(&["table", "--lambda", "0.3"]), 1);
    assert_single_line_error(&soliton(&["verify", "--lambda", "0.3"]), 1);
    assert_single_line_error(&soliton(&["qform", "--lambda", "1", "--s0", "2", "--length", "5", "--abs-tol", "0"]), 1);
}

#[test]
fn curve_csv() {
    let o = soliton(&["curve", "--lambda", "1", "--s-min", "-3", "--s-max", "3", "--samples", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "s,x1,x3,dx1,dx3,kappa,weight");
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[4], "0,0,0,1,0,2,1");

    let o = soliton(&["curve", "--lambda", "3", "--s-min", "-1", "--s-max", "1", "--samples", "3"]);
    let row: Vec<f64> = stdout(&o).lines().nth(2).unwrap().split(',').map(|f| f.parse().unwrap()).collect();
    assert_eq!(row[0], 0.0);
    assert!((row[2] - 2f64.ln()).abs() < 1e-15);
    assert_eq!(row[5], 4.0);
    assert_eq!(row[6], 2.0);
}

#[test]
fn curve_output_is_deterministic() {
    let dir = tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = soliton(&["curve", "--lambda", "0.25", "--samples", "257", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert!(!x.contains(&b'\r'));
}

#[test]
fn critical_length_examples() {
    let value = |args: &[&str]| -> f64 {
        let o = soliton(args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let text = stdout(&o);
        let line = text.lines().find(|l| l.starts_with("L0: ")).unwrap();
        line[4..].parse().unwrap()
    };
    assert!((value(&["critical-length", "--lambda", "3", "--sigma", "0"]) - 2.1570).abs() < 5e-5);
    assert!((value(&["critical-length", "--lambda", "1", "--s0", "2"]) - 6.0127).abs() < 5e-5);
    assert!((value(&["critical-length", "--lambda", "3", "--uniform"]) - 3.0504).abs() < 5e-5);
    assert!((value(&["critical-length", "--radius", "1"]) - 8.8858).abs() < 5e-5);
    let strong = value(&["critical-length", "--lambda", "3", "--sigma", "0", "--strong"]);
    assert!((strong - 2.156_983_109_134_744 / 2.0).abs() < 1e-12);
    let lt1 = value(&["critical-length", "--lambda", "0.25", "--s0", "3"]);
    assert!(lt1 > 20.0 && lt1 < 25.0);

    let o = soliton(&["critical-length", "--lambda", "1", "--s0", "0.9"]);
    assert_single_line_error(&o, 1);
    assert!(stderr(&o).contains("threshold"));
    assert_single_line_error(&soliton(&["critical-length", "--lambda", "0.5", "--s0", "1"]), 1);
    assert_single_line_error(&soliton(&["critical-length", "--radius", "1.5"]), 1);
}

#[test]
fn critical_length_json() {
    let o = soliton(&["critical-length", "--lambda", "1", "--s0", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["method"], "closed-form");
    assert_eq!(v["mode"], "volume-preserving");
    assert!((v["l0"].as_f64().unwrap() - 6.0127).abs() < 5e-5);
}

#[test]
fn qform_reports_routine_value() {
    let o = soliton(&["qform", "--lambda", "0.25", "--s0", "3", "--length", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["reduced_integral"].as_f64().unwrap() - 7.1166).abs() < 1e-3);
    assert_eq!(v["certificate"], false);

    let o = soliton(&["qform", "--lambda", "3", "--sigma", "0", "--length", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let (q, c) = (v["total"].as_f64().unwrap(), v["closed_form"].as_f64().unwrap());
    assert!((q - c).abs() < 1e-8 * c.abs().max(1.0));
}

#[test]
fn cylinder_report() {
    let o = soliton(&["cylinder", "--radius", "1", "--length", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["soliton_q"].as_f64().unwrap() < 0.0);
    assert!(v["alt_q_plain"].as_f64().unwrap() > 0.0);
    let o = soliton(&["cylinder", "--radius", "2", "--length", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["soliton_l0"].is_null());
}

fn table_csv(lambda: &str) -> TableReport {
    let o = soliton(&["table", "--lambda", lambda, "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    TableReport::from_csv(&stdout(&o)).unwrap()
}

#[test]
fn default_tables() {
    let t = table_csv("0.25");
    assert_eq!(t.cells[3][4], -0.0273);
    assert_eq!(t.first_negative_marks, vec![Some(2), Some(2), Some(2), Some(4), None]);
    let t = table_csv("0.5");
    assert_eq!(t.cells[4][0], 3.2460);
    assert_eq!(t.first_negative_marks, vec![Some(2), Some(1), Some(2), Some(4), None]);
    let t = table_csv("0.75");
    assert_eq!(t.cells[0][0], 18.3781);
    assert_eq!(t.first_negative_marks, vec![Some(3), Some(4), Some(4), Some(5), None]);
}

#[test]
fn table_csv_reparse_is_idempotent() {
    let o = soliton(&["table", "--lambda", "0.5", "--format", "csv"]);
    let text = stdout(&o);
    let report = TableReport::from_csv(&text).unwrap();
    assert_eq!(report.to_csv(), text);
}

#[test]
fn custom_table_and_markdown() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("t.md");
    let o = soliton(&[
        "table", "--lambda", "0.3", "--s0", "3,4", "--lengths", "10,30", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let md = fs::read_to_string(path).unwrap();
    assert!(md.contains("| s0 \\ L | 10 | 30 |"));
    assert_eq!(md.lines().filter(|l| l.starts_with("| 3 |") || l.starts_with("| 4 |")).count(), 2);
}

fn obj(args: &[&str]) -> String {
    let dir = tempdir().unwrap();
    let path = dir.path().join("m.obj");
    let mut full = vec!["mesh"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = soliton(&full);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    fs::read_to_string(path).unwrap()
}

#[test]
fn mesh_counts_and_layout() {
    let text = obj(&["--lambda", "3", "--length", "1", "--ns", "2", "--nt", "2"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2);

    let text = obj(&["--lambda", "1", "--s0", "3", "--length", "5", "--ns", "3", "--nt", "2"]);
    let verts: Vec<&str> = text.lines().filter(|l| l.starts_with("v ")).collect();
    assert_eq!(verts[2], "v 0 0 0");
    assert_eq!(verts[3], "v 0 5 0");

    let text = obj(&["--radius", "1", "--length", "4", "--ns", "9", "--nt", "5"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 45);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 8 * 4);
    for line in text.lines().filter(|l| l.starts_with("f ")) {
        for idx in line[2..].split(' ') {
            let i: usize = idx.parse().unwrap();
            assert!((1..=45).contains(&i));
        }
    }
}

#[test]
fn mesh_is_deterministic() {
    let args = ["--lambda", "0.5", "--s0", "2", "--length", "3", "--ns", "20", "--nt", "7"];
    assert_eq!(obj(&args), obj(&args));
}

#[test]
fn mesh_errors() {
    assert_single_line_error(
        &soliton(&["mesh", "--lambda", "1", "--s0", "3", "--length", "5", "--out", "/nonexistent/dir/m.obj"]),
        1,
    );
    let dir = tempdir().unwrap();
    let p = dir.path().join("m.obj");
    assert_single_line_error(
        &soliton(&["mesh", "--lambda", "1", "--s0", "3", "--length", "5", "--ns", "1", "--out", p.to_str().unwrap()]),
        1,
    );
}

#[test]
fn verify_full_suite_passes() {
    let o = soliton(&["verify"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    assert_eq!(text.lines().filter(|l| l.starts_with("INFO")).count(), 3);
}

#[test]
fn verify_detects_loose_quadrature() {
    let o = soliton(&["verify", "--suite", "tables", "--abs-tol", "1e-2", "--rel-tol", "1e-2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(stderr(&o).lines().count(), 1);
}

#[test]
fn verify_single_table() {
    let o = soliton(&["verify", "--suite", "tables", "--lambda", "0.25"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("tables: λ = 0.25"));
    assert!(!text.contains("λ = 0.5"));
}

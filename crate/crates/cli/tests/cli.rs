use std::process::{Command, Output};

use sympspin_core::analysis::{example_raised, EXAMPLE_SPINOR};
use sympspin_core::{parse_spinor, SpinorPoly};

fn sympspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympspin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// The spinor lines of text output, header comments dropped.
fn body(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
}

#[test]
fn apply_dirac_after_raising() {
    let o = sympspin(&["apply", "--n", "1", "--op", "Ds Xs", "--expr", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# all spinors implicitly carry exp(-|q|^2/2)\n"));
    assert_eq!(body(&o), ["-i"]);
}

#[test]
fn apply_reads_stdin_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    std::fs::write(&path, format!("{EXAMPLE_SPINOR}\n")).unwrap();
    let o = sympspin(&["apply", "--n", "2", "--op", "Ds", "--input", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(body(&o), ["0"]);
}

#[test]
fn example_twistor_components() {
    let raised = example_raised().to_string();
    let o = sympspin(&["apply", "--n", "2", "--op", "Ts", "--expr", &raised]);
    assert!(o.status.success());
    let comps: Vec<SpinorPoly> = body(&o)
        .iter()
        .map(|l| {
            let (_, p) = l.split_once(": ").expect("component line");
            parse_spinor(p, 2).unwrap()
        })
        .collect();
    assert_eq!(comps.len(), 4);
    for (k, want) in ["q2*(x2 + i*x4)^2", "q1*(x1 + i*x3)^2"].iter().enumerate() {
        assert_eq!(comps[k], parse_spinor(want, 2).unwrap());
    }
}

#[test]
fn apply_json_output() {
    let o = sympspin(&["apply", "--n", "1", "--op", "Xs", "--expr", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["op"], "Xs");
    // ∂_q also hits the implicit Gaussian
    assert_eq!(parse_spinor(v["outputs"][0].as_str().unwrap(), 1).unwrap(), parse_spinor("i*x1*q1 - x2*q1", 1).unwrap());
}

#[test]
fn kernel_of_dirac_on_constants() {
    let o = sympspin(&["kernel", "--n", "1", "--op", "Ds", "--h", "0", "--Q", "2", "--parity", "even"]);
    assert!(o.status.success());
    let lines = body(&o);
    assert_eq!(lines[0], "dim 2");
    assert_eq!(lines[1..], ["1", "q1^2"]);
}

#[test]
fn kernel_json_round_trips_the_subspace() {
    let o = sympspin(&["kernel", "--n", "1", "--op", "Ts", "--h", "2", "--Q", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 2);
    let doc = serde_json::from_value(v["subspace"].clone()).unwrap();
    let sub = sympspin_core::graded::SubspaceBasis::from_document(&doc).unwrap();
    assert_eq!(sub.dim(), 2);
}

#[test]
fn verify_theorem_and_example() {
    let o = sympspin(&["verify", "--n", "2", "--hmax", "3", "--Q", "4", "--suites", "theorem,example", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.len(), 6);
    assert!(v.iter().all(|r| r["pass"] == true && r["evidence"] == "finite truncation"));
}

#[test]
fn verify_writes_one_file_per_suite_and_report_reads_them() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sympspin(&["verify", "--n", "1", "--hmax", "2", "--Q", "4", "--suites", "triangle,sl2", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("triangle.json").is_file());
    assert!(dir.path().join("sl2.json").is_file());
    let o = sympspin(&["report", "--input", out]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,Q,parity,l,j0,j1,j2\n1,4,both,0,5,4,3\n1,4,both,1,4,3,\n1,4,both,2,3,,\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["apply", "--n", "2", "--op", "Bogus", "--expr", "1"][..],
        &["apply", "--n", "1", "--op", "Ds", "--expr", "x3"],
        &["apply", "--n", "0", "--op", "Ds", "--expr", "1"],
        &["kernel", "--n", "1", "--op", "Ds", "--h", "0"],
        &["verify", "--n", "1", "--hmax", "1", "--Q", "1", "--suites", "nonsense"],
        &["report", "--input", "/nonexistent/reports"],
    ] {
        let o = sympspin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

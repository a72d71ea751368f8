use std::process::{Command, Output};

use legendre_ode::render::reports_to_json_lines;
use legendre_ode::VerifyReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legendre-ode"))
        .args(args)
        .output()
        .expect("failed to execute binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn legendre_csv_golden() {
    let out = run(&["legendre", "--n", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1/2,0,3/2\n");
}

#[test]
fn legendre_default_plain() {
    let out = run(&["legendre", "--n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn legendre_rodrigues_prints_canonical_fractions() {
    let out = run(&[
        "legendre",
        "--n",
        "4",
        "--method",
        "rodrigues",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3/8,0,-15/4,0,35/8\n");
}

#[test]
fn every_method_agrees_on_p6() {
    let expected = "-5/16,0,105/16,0,-315/16,0,231/16\n";
    for method in [
        "recurrence",
        "rodrigues",
        "explicit1",
        "explicit2",
        "explicit3",
    ] {
        let out = run(&[
            "legendre", "--n", "6", "--method", method, "--format", "csv",
        ]);
        assert!(out.status.success(), "{method}");
        assert_eq!(stdout(&out), expected, "{method}");
    }
}

#[test]
fn legendre_latex_and_json() {
    let out = run(&["legendre", "--n", "1", "--format", "latex"]);
    assert_eq!(stdout(&out), "\\[ p_{1}(x) = x \\]\n");
    let out = run(&["legendre", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["-1/2", "0", "3/2"]));
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        &["legendre", "--n", "-1"][..],
        &["legendre", "--n", "2", "--method", "explicit4"],
        &["coeffs", "--n-max", "0"],
        &["higher", "--alpha", "0", "--order", "3"],
        &["verify", "--n-max", "5", "--N-max", "3", "--order", "2"],
        &["legendre", "--n", "2", "--format", "xml"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn coeffs_golden() {
    let out = run(&["coeffs", "--n-max", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n1,1\n3,3,1\n15,15,6,1\n");
    let out = run(&["coeffs", "--n-max", "1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn coeffs_with_reconciliation() {
    let out = run(&["coeffs", "--n-max", "10", "--check-closed-form"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.ends_with("closed-form reconciliation: 110 entries checked, 0 mismatches\n"));

    let out = run(&[
        "coeffs",
        "--n-max",
        "3",
        "--check-closed-form",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["rows"],
        serde_json::json!([["1"], ["1", "1"], ["3", "3", "1"]])
    );
    assert_eq!(v["reconciliation"]["checked"], 12);
    assert_eq!(v["reconciliation"]["mismatches"], serde_json::json!([]));
}

#[test]
fn higher_rows() {
    let out = run(&["higher", "--alpha", "2", "--order", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n0,2\n-1,0,4\n");
}

#[test]
fn verify_json_all_pass_and_round_trip() {
    let out = run(&[
        "verify", "--n-max", "5", "--N-max", "2", "--order", "12", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let reports: Vec<VerifyReport> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid report"))
        .collect();
    assert_eq!(reports.len(), 26);
    assert!(reports
        .iter()
        .all(|r| r.passed && r.first_failure.is_none()));
    assert!(text.lines().all(|l| l.contains("\"passed\":true")));
    assert_eq!(reports_to_json_lines(&reports), text);
}

#[test]
fn verify_minimal_bounds() {
    let out = run(&["verify", "--n-max", "0", "--N-max", "1", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("4 reports, 4 passed, 0 failed\n"));
}

#[test]
fn verify_csv_and_latex() {
    let out = run(&[
        "verify", "--n-max", "0", "--N-max", "1", "--order", "1", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("identity_id,params,passed,t_power,x_power,lhs,rhs")
    );
    assert_eq!(lines.next(), Some("LEGENDRE_DE,n=0,true,,,,"));
    let out = run(&[
        "verify", "--n-max", "0", "--N-max", "1", "--order", "1", "--format", "latex",
    ]);
    assert!(stdout(&out).starts_with("\\begin{tabular}"));
}

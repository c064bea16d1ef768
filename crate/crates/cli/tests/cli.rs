//! End-to-end checks of the command surface: output shapes, exit codes,
//! and error diagnostics.

// Frozen decimal fixtures are the point of these assertions.
#![allow(clippy::approx_constant)]

use std::process::{Command, Output};

fn picert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn pi_emits_header_and_row() {
    let out = picert(&["pi", "--width", "1e-10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k_used,n,lo,hi,width"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 5);
    let lo: f64 = row[2].parse().unwrap();
    let hi: f64 = row[3].parse().unwrap();
    let width: f64 = row[4].parse().unwrap();
    assert!(lo < 3.141592653589793 && 3.141592653589793 < hi);
    assert!(width <= 1e-10);
    assert!(lines.next().is_none());
    assert!(!text.contains('\r'));
}

#[test]
fn table_markdown_lists_the_first_two_stages() {
    let out = picert(&[
        "table",
        "--scheme",
        "inscribed",
        "--kmax",
        "1",
        "--format",
        "md",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("| k "));
    assert_eq!(text.lines().count(), 4); // header, rule, two rows
    assert!(text.contains("1.2990381056766"));
    assert!(text.contains("2.5980762113533"));
}

#[test]
fn table_csv_matches_markdown_values() {
    let csv = stdout(&picert(&["table", "--scheme", "trapezoid", "--kmax", "2"]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("k,n,value_lo,value_hi,abs_error_bound,local_order")
    );
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[0], "0");
    assert_eq!(first[1], "3");
    // first row has no local order
    assert_eq!(first[5], "");
}

#[test]
fn verify_both_theorems_succeed() {
    for theorem in ["1", "2"] {
        let out = picert(&["verify", "--theorem", theorem, "--cells", "200"]);
        assert_eq!(exit_code(&out), 0, "theorem {theorem}");
        let text = stdout(&out);
        let row = text.lines().nth(1).unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[2], "200");
        assert_eq!(fields[3], "200");
        let margin: f64 = fields[5].parse().unwrap();
        assert!(margin > 0.0);
    }
}

#[test]
fn sinc_witness_verifies_at_moderate_epsilon() {
    let out = picert(&["sinc", "--epsilon", "1e-4"]);
    assert_eq!(exit_code(&out), 0);
    let row = stdout(&out);
    let fields: Vec<&str> = row.lines().nth(1).unwrap().split(',').collect();
    let delta: f64 = fields[1].parse().unwrap();
    assert!(delta > 0.0 && delta < 1e-3);
    assert_eq!(fields[8], "true");
}

#[test]
fn sinc_below_the_separation_floor_exits_two() {
    // the witness is still emitted, but the chain cannot be strictly
    // separated at delta ~ 2e-9, and the status says so
    let out = picert(&["sinc", "--epsilon", "1e-9"]);
    assert_eq!(exit_code(&out), 2);
    let row = stdout(&out);
    let fields: Vec<&str> = row.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(fields[8], "false");
}

#[test]
fn area_annulus_sector_values() {
    let area = stdout(&picert(&["area", "--radius", "2"]));
    let fields: Vec<&str> = area.lines().nth(1).unwrap().split(',').collect();
    let lo: f64 = fields[1].parse().unwrap();
    let hi: f64 = fields[2].parse().unwrap();
    assert!(lo < 4.0 * 3.141592653589793 && 4.0 * 3.141592653589793 < hi);

    let ann = stdout(&picert(&["annulus", "--R", "2", "--r", "1"]));
    let fields: Vec<&str> = ann.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(fields[6], "true");
    let lo: f64 = fields[2].parse().unwrap();
    assert!(lo < 3.0 * 3.141592653589793);

    let sec = stdout(&picert(&["sector", "--theta", "0", "--radius", "1"]));
    let fields: Vec<&str> = sec.lines().nth(1).unwrap().split(',').collect();
    let lo: f64 = fields[2].parse().unwrap();
    let hi: f64 = fields[3].parse().unwrap();
    assert!(lo <= 0.0 && 0.0 <= hi);
}

#[test]
fn validation_failures_exit_one_with_diagnostics() {
    let cases: &[&[&str]] = &[
        &["pi", "--width", "1e-20"],
        &["pi", "--width", "nan"],
        &["table", "--scheme", "inscribed", "--kmax", "31"],
        &[
            "table",
            "--scheme",
            "inscribed",
            "--kmax",
            "2",
            "--radius",
            "-1",
        ],
        &["verify", "--theorem", "3", "--cells", "10"],
        &["verify", "--theorem", "2", "--cells", "0"],
        &["sinc", "--epsilon", "0.5"],
        &["area", "--radius", "0"],
        &["annulus", "--R", "1", "--r", "2"],
        &["sector", "--theta", "7", "--radius", "1"],
        &["pi"],
        &["nonsense"],
    ];
    for args in cases {
        let out = picert(args);
        assert_eq!(exit_code(&out), 1, "args: {args:?}");
        assert!(!out.stderr.is_empty(), "args: {args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = picert(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("picert"));
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        vec!["pi", "--width", "1e-8"],
        vec!["table", "--scheme", "inscribed", "--kmax", "5"],
        vec!["verify", "--theorem", "2", "--cells", "100"],
    ] {
        let a = picert(&args);
        let b = picert(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}

#[test]
fn golden_outputs_are_stable() {
    // IEEE 754 +, -, *, /, sqrt are correctly rounded everywhere, so these
    // bytes are platform-independent
    let pi = stdout(&picert(&["pi", "--width", "1e-10"]));
    assert_eq!(
        pi,
        "k_used,n,lo,hi,width\n\
         18,786432,3.1415926535814127e0,3.1415926536065304e0,2.5117685709119542e-11\n"
    );

    let table = stdout(&picert(&["table", "--scheme", "inscribed", "--kmax", "1"]));
    assert_eq!(
        table,
        "k,n,value_lo,value_hi,abs_error_bound,local_order\n\
         0,3,1.2990381056766576e0,1.2990381056766582e0,1.8425545479298728e0,\n\
         1,6,2.5980762113533151e0,2.5980762113533165e0,5.4351644225321527e-1,1.7613117453480660e0\n"
    );
}

#[test]
fn csv_numbers_reparse_to_the_serialized_bits() {
    let text = stdout(&picert(&["table", "--scheme", "inscribed", "--kmax", "6"]));
    for line in text.lines().skip(1) {
        for field in line.split(',').skip(2).filter(|f| !f.is_empty()) {
            let v: f64 = field.parse().unwrap();
            assert_eq!(format!("{v:.16e}"), field, "field {field}");
        }
    }
}

//! End-to-end checks of the `mhs` binary: exit codes, output shapes, and
//! report determinism across parallel runs.

use std::process::{Command, Output};

fn mhs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_exact_values() {
    let out = mhs(&["compute", "--kind", "H", "--index", "1,2", "--n", "3", "--exact"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5/12");

    let out = mhs(&["compute", "--kind", "Hbar", "--index", "2", "--n", "2", "--exact"]);
    assert_eq!(stdout(&out).trim(), "10/9");

    // repetition macro
    let out = mhs(&["compute", "--kind", "S", "--index", "2^2", "--n", "2", "--exact"]);
    assert_eq!(stdout(&out).trim(), "21/16");
}

#[test]
fn compute_modular_value() {
    // S_6(1,2) mod 7 equals B_{7-3} = -1/30 = 3 (mod 7)
    let out = mhs(&[
        "compute", "--kind", "S", "--index", "1,2", "--n", "6", "--mod", "7", "--exp", "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3 (mod 7^1)");
}

#[test]
fn usage_errors_exit_2() {
    let out = mhs(&["compute", "--kind", "Q", "--index", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mhs(&["compute", "--kind", "H", "--index", "1,0", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mhs(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    // clap-level parse errors also use code 2
    let out = mhs(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_congruences_pass_and_report_format() {
    let out = mhs(&[
        "verify",
        "--congruences",
        "GEN-w3",
        "--primes",
        "5..100",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23); // primes in 5..=100
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert_eq!(v["kind"], "congruence");
        assert_eq!(v["id"], "GEN-w3");
        assert_eq!(v["pass"], true);
        assert_eq!(v["micros"], 0);
    }
}

#[test]
fn verify_identities_selection() {
    let out = mhs(&[
        "verify",
        "--identities",
        "L2.1e",
        "--nmax",
        "30",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "kind,id,params,prime,modexp,lhs,rhs,pass,skipped,micros"
    );
    assert!(text.lines().count() > 20);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = [
        "verify",
        "--congruences",
        "T-121-*",
        "--primes",
        "5..80",
        "--format",
        "json",
        "--jobs",
        "4",
    ];
    let a = mhs(&args);
    let b = mhs(&args);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn series_targets_run() {
    let out = mhs(&["series", "--target", "APERY3", "--digits", "30"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    let out = mhs(&[
        "series", "--target", "ZAGIER-ZZZZ", "--a", "1", "--b", "1", "--digits", "15",
    ]);
    assert!(out.status.success());

    let out = mhs(&["series", "--target", "LESH-2", "--m", "2", "--digits", "25"]);
    assert!(out.status.success());
}

#[test]
fn catalog_lists_registry() {
    let out = mhs(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["L2.1a", "T-S2", "C3-eq41", "WOLST-1", "ZP-odd", "APERY2"] {
        assert!(text.contains(needle), "catalog missing {needle}");
    }

    let out = mhs(&["catalog", "--format", "json"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let _: serde_json::Value = serde_json::from_str(line).expect("json");
    }
}

#[test]
fn output_file_written() {
    let dir = std::env::temp_dir().join(format!("mhs-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = mhs(&[
        "verify",
        "--congruences",
        "WOLST-*",
        "--primes",
        "5..50",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.lines().count() > 10);
    std::fs::remove_dir_all(&dir).ok();
}

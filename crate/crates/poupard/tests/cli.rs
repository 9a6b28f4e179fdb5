//! End-to-end checks of the `poupard` binary: output formats and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poupard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn triangle_csv_golden() {
    let out = run(&["triangle", "--kind", "sec", "--mode", "forward", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n1,3,1\n5,15,21,15,5\n");
}

#[test]
fn triangle_json_golden() {
    let out = run(&["triangle", "--kind", "tan", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim_end(),
        r#"{"kind":"tan","regime":"r1","rows":[["1"],["0","2","0"]]}"#
    );
}

#[test]
fn triangle_modes_agree() {
    let forward = run(&["triangle", "--kind", "sec", "--n", "8"]);
    let diagonal = run(&["triangle", "--kind", "sec", "--mode", "diagonal", "--n", "8"]);
    assert!(forward.status.success() && diagonal.status.success());
    assert_eq!(stdout(&forward), stdout(&diagonal));
}

#[test]
fn enumerate_perm_grn_csv() {
    let out = run(&["enumerate", "--object", "perm", "--n", "5", "--stat", "grn"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,4\n2,8\n3,4\n");
}

#[test]
fn enumerate_tree_stats_agree() {
    let pom = run(&["enumerate", "--object", "tree", "--n", "7", "--stat", "pom"]);
    let eoc = run(&["enumerate", "--object", "tree", "--n", "7", "--stat", "eoc"]);
    assert!(pom.status.success() && eoc.status.success());
    assert_eq!(stdout(&pom), stdout(&eoc));
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["--quiet", "verify", "--suite", "identities", "--n-max", "6"]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(line.contains(r#""fail":0"#), "{line}");
}

#[test]
fn oeis_check_passes() {
    let out = run(&["--quiet", "oeis", "--sequence", "a008301", "--n-max", "50"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(r#""pass":50"#));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["triangle", "--kind", "tan", "--n", "0"][..],
        &["enumerate", "--object", "perm", "--n", "4", "--stat", "pom"],
        &["enumerate", "--object", "tree", "--n", "4", "--stat", "grn"],
        &["verify", "--suite", "all", "--n-max", "5"],
        &["oeis", "--sequence", "a125053", "--n-max", "1000"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

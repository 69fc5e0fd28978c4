//! End-to-end runs of the `diagcat` binary.

use diagcat::diagram::Partition;
use diagcat::transform::PartialMap;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn eval_idempotent_pair() {
    let o = run(&["eval", "--cat", "P", "e[1,2] ; e[1,2]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("P[2,2]{ {1} {2,-2} {-1} }"));
    assert_eq!(lines.next(), Some("floating: 1"));
}

#[test]
fn count_planar_matchings() {
    let o = run(&["count", "--cat", "TL", "-m", "0", "-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn verify_brauer_soundness_passes() {
    let o = run(&["verify", "soundness", "--presentation", "B-tensor", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.is_empty());
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

#[test]
fn failing_report_exits_one() {
    let o = run(&["verify", "hat", "--presentation", "B-tensor"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL hat"));
}

#[test]
fn budget_report_exits_zero() {
    let o = run(&[
        "verify",
        "joinability",
        "--presentation",
        "P-tensor",
        "-m",
        "1",
        "-n",
        "1",
        "--size",
        "3",
        "--depth",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("BUDGET joinability"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--cat", "P", "X ; ;"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--cat", "Nope", "X"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "soundness", "--presentation", "Nope"]).status.code(), Some(2));
}

#[test]
fn eval_output_parses_back() {
    for (cat, term) in [
        ("P", "(X # D) ; (id[1] # U # U # id[1])"),
        ("B", "(Uu # X) ; (id[1] # U # id[1])"),
        ("TL", "(id[1] # Uu) ; (U # id[1])"),
    ] {
        let o = run(&["eval", "--cat", cat, term]);
        assert_eq!(o.status.code(), Some(0), "{cat} {term}");
        let first = stdout(&o).lines().next().unwrap().to_string();
        let p = Partition::parse(&first).unwrap();
        assert_eq!(p.to_string(), first);
    }
    for (cat, term) in [("PT", "X ; (U # id[1])"), ("OI", "id[1] # Uu # U")] {
        let o = run(&["eval", "--cat", cat, term]);
        assert_eq!(o.status.code(), Some(0), "{cat} {term}");
        let first = stdout(&o).lines().next().unwrap().to_string();
        let f = PartialMap::parse(&first).unwrap();
        assert_eq!(f.to_string(), first);
    }
}

#[test]
fn compose_and_tensor_elements() {
    let o = run(&["compose", "--cat", "P", "P[2,2]{ {1,2} {-1} {-2} }", "P[2,1]{ {1,-1} {2} }"]);
    assert_eq!(stdout(&o), "P[2,1]{ {1,2} {-1} }\nfloating: 1\n");
    let o = run(&["tensor", "--cat", "PT", "F[1,1]{1:1}", "F[2,1]{2:1}"]);
    assert_eq!(stdout(&o).trim(), "F[3,2]{1:1 3:2}");
}

#[test]
fn dump_is_deterministic() {
    let a = run(&["dump-catalog", "--presentation", "TL-tensor"]);
    let b = run(&["dump-catalog", "--presentation", "TL-tensor"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_matches_count() {
    let listed = run(&["enumerate", "--cat", "B", "-m", "2", "-n", "2"]);
    let counted = run(&["count", "--cat", "B", "-m", "2", "-n", "2"]);
    assert_eq!(stdout(&listed).lines().count().to_string(), stdout(&counted).trim());
}

use std::process::Command;

use pbt_hopf::coalgebra::AdmissibleCutResult;
use pbt_hopf::hopf::HopfReport;
use pbt_hopf::tree::enumerate;
use pbt_hopf::{Alphabet, LinComb, TensorComb, Tree};
use pbt_hopf_cli::run;

/// Runs the CLI in process and returns (exit code, stdout, stderr).
fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pbt-hopf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout_ok(&["product", "(|^a |)", "(|^b |)"]),
        "(|^a (|^b |)) + ((|^a |)^b |)"
    );
    assert_eq!(
        stdout_ok(&["coproduct", "(|^a |)", "--method", "cuts"]),
        "(|^a |) (x) | + | (x) (|^a |)"
    );
    assert_eq!(stdout_ok(&["catalan", "3"]), "5");
    assert_eq!(stdout_ok(&["catalan", "30"]), "3814986502092304");
}

#[test]
fn enumerate_lists_canonical_trees() {
    assert_eq!(
        stdout_ok(&["enumerate", "2"]),
        "(|^o (|^o |))\n((|^o |)^o |)"
    );
    let out = stdout_ok(&["enumerate", "3", "--labels", "a,b"]);
    assert_eq!(out.lines().count(), 5 * 8);
    assert_eq!(stdout_ok(&["enumerate", "0"]), "|");
}

#[test]
fn coproduct_methods_print_identically() {
    for (labels, bound) in [("o", 6), ("a,b", 4)] {
        let x = Alphabet::parse_list(labels).unwrap();
        for n in 0..=bound {
            for t in enumerate(n, &x).unwrap() {
                let s = t.to_string();
                let rec =
                    stdout_ok(&["coproduct", &s, "--method", "recursive", "--labels", labels]);
                let cuts = stdout_ok(&["coproduct", &s, "--method", "cuts", "--labels", labels]);
                assert_eq!(rec, cuts, "{s}");
            }
        }
    }
}

#[test]
fn expressions() {
    assert_eq!(stdout_ok(&["antipode", "(|^a |) + 2"]), "2*| - (|^a |)");
    assert_eq!(
        stdout_ok(&["product", "|", "3*(|^a |) - (|^a |)"]),
        "2*(|^a |)"
    );
    assert_eq!(stdout_ok(&["coproduct", "(|^a |) - (|^a |)"]), "0");
    assert_eq!(
        stdout_ok(&["antipode", "(|^a (|^b |))"]),
        "-(|^a (|^b |)) + (|^b (|^a |)) + ((|^b |)^a |)"
    );
}

#[test]
fn cuts_table() {
    let out = stdout_ok(&["cuts", "((|^b (|^c |))^a |)"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1], "{[L]}: P = (|^b (|^c |)); R = (|^a |)");
    assert_eq!(lines[3], "{[L], [L,R]}: not admissible");
    assert_eq!(lines[4], "total: P = ((|^b (|^c |))^a |); R = |");
    let only = stdout_ok(&["cuts", "((|^b (|^c |))^a |)", "--admissible-only"]);
    assert_eq!(only.lines().count(), 4);
}

#[test]
fn primitives_text() {
    assert_eq!(
        stdout_ok(&["primitives", "1", "--labels", "a,b"]),
        "dimension 2\n(|^a |)\n(|^b |)"
    );
    assert_eq!(
        stdout_ok(&["primitives", "2"]),
        "dimension 1\n-(|^o (|^o |)) + ((|^o |)^o |)"
    );
}

#[test]
fn json_round_trips() {
    let out = stdout_ok(&["--format", "json", "product", "(|^a |)", "(|^b |)"]);
    let p: LinComb = serde_json::from_str(&out).unwrap();
    assert_eq!(p.to_string(), "(|^a (|^b |)) + ((|^a |)^b |)");

    let out = stdout_ok(&["coproduct", "((|^b |)^a (|^c |))", "--format", "json"]);
    let d: TensorComb = serde_json::from_str(&out).unwrap();
    assert_eq!(d.len(), 6);
    assert_eq!(
        d.to_string(),
        stdout_ok(&["coproduct", "((|^b |)^a (|^c |))"])
    );

    let out = stdout_ok(&["enumerate", "2", "--format", "json"]);
    let trees: Vec<Tree> = serde_json::from_str(&out).unwrap();
    assert_eq!(trees.len(), 2);

    let out = stdout_ok(&["cuts", "((|^b |)^a (|^c |))", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        assert_eq!(row["admissible"], true);
        let back: AdmissibleCutResult = serde_json::from_value(row).unwrap();
        assert!(!back.p.is_zero());
    }

    let out = stdout_ok(&[
        "verify", "--degree", "2", "--labels", "a,b", "--format", "json",
    ]);
    let report: HopfReport = serde_json::from_str(&out).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.degree_bound, 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let (code, out, err) = cli(&["product", "(|^a", "|"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("byte 4"), "{err}");

    let (code, _, err) = cli(&["product", "(|^a |)", "(|^b |)", "--labels", "a"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown label b"), "{err}");

    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["enumerate", "2", "--labels", "a,,b"]).0, 2);
    assert_eq!(cli(&["coproduct", "|", "--method", "magic"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn degree_guard() {
    let (code, _, err) = cli(&["verify", "--degree", "8", "--labels", "a,b,c"]);
    assert_eq!(code, 2);
    assert!(err.contains("--force"), "{err}");
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pbt-hopf"))
}

#[test]
fn binary_verify_json_exit_0() {
    let out = binary()
        .args([
            "verify", "--degree", "4", "--labels", "a,b", "--format", "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: HopfReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.alphabet.len(), 2);
}

#[test]
fn binary_exit_codes_and_env_format() {
    let out = binary().args(["product", "(|^a", "|"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = binary()
        .args(["catalan", "4"])
        .env("PBT_HOPF_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["catalan"], "14");
}

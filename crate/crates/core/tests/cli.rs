use std::process::Command;

use dsnum::cli::run;
use serde_json::Value;

fn dsnum(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("dsnum").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dsnum"))
}

#[test]
fn exit_codes() {
    assert_eq!(dsnum(&["convert", "--radix", "10x2", "--to-ds", "38"]).0, 0);

    let (code, _, err) = dsnum(&["convert", "--radix", "10x2", "--to-ds", "-5"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "), "{err}");

    let (code, _, err) = dsnum(&["convert", "--radix", "10x2", "--to-ds", "110"]);
    assert_eq!(code, 1, "{err}");

    let (code, _, err) = dsnum(&["convert", "--radix", "10x2", "--to-int", "1a"]);
    assert_eq!(code, 1, "{err}");

    assert_eq!(dsnum(&["convert", "--radix", "0,3", "--to-ds", "1"]).0, 2);
    assert_eq!(dsnum(&["table", "--which", "4"]).0, 2);
    assert_eq!(dsnum(&["frobnicate"]).0, 2);
    assert_eq!(dsnum(&["--help"]).0, 0);
}

#[test]
fn binary_exit_codes() {
    let ok = binary().args(["table", "--which", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert_eq!(text.lines().count(), 15);

    let domain = binary()
        .args(["add", "--radix", "10x2", "9", "(9,9,9)_3"])
        .output()
        .unwrap();
    assert_eq!(domain.status.code(), Some(1));

    let usage = binary().args(["add", "--radix", "10x2"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn conversions() {
    assert_eq!(dsnum(&["convert", "--radix", "4,5,2,6", "--to-ds", "113"]).1, "201\n");
    assert_eq!(dsnum(&["convert", "--radix", "4,5,2,6", "--to-int", "(5)_B"]).1, "265\n");
    assert_eq!(dsnum(&["convert", "--radix", "10x3", "--to-int", "12_2"]).1, "14\n");
    assert_eq!(
        dsnum(&["convert", "--radix", "10x3", "--to-ds", "111", "--style", "parenthesized"]).1,
        "(1)_B\n"
    );
}

#[test]
fn json_schema() {
    let (code, out, _) = dsnum(&["convert", "--radix", "4,5,2,6", "--to-ds", "70", "--format", "json"]);
    assert_eq!(code, 0);
    let record: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(record["system"]["k"], serde_json::json!([4, 5, 2, 6]));
    assert_eq!(record["system"]["b"], serde_json::json!(["1", "5", "26", "53"]));
    assert_eq!(record["system"]["b_top"], "319");
    assert_eq!(record["digits"], serde_json::json!([1, 0, 3]));
    assert_eq!(record["start_level"], 4);
    assert_eq!(record["value"], "70");

    let (_, out, _) = dsnum(&["add", "--radix", "10x5", "25_5", "324_3", "--format", "json"]);
    let record: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(record["digits"], serde_json::json!([2, 5, 3, 2, 3]));
    assert_eq!(record["value"], "28139");
}

#[test]
fn add_trace_layout() {
    let (code, out, _) = dsnum(&["add", "--radix", "10x4", "3_4", "26_3", "--trace"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[2].starts_with(" Sum ="), "{out}");
    assert!(lines[2].ends_with("[Rule 1]"), "{out}");
    assert!(lines.iter().any(|l| l.contains("[Rule 3")), "{out}");
    assert_eq!(*lines.last().unwrap(), "3259");
}

#[test]
fn tree_exports() {
    let (code, dot, _) = dsnum(&["tree", "--radix", "2,2,2", "--dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph tree {"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 15);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 14);

    let (_, csv, _) = dsnum(&["tree", "--radix", "2,2,2", "--csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "rank,numeral");
    assert_eq!(lines[1], "0,0");
    assert_eq!(lines[14], "13,111");
}

#[test]
fn size_guard_override() {
    let refused = binary()
        .args(["tree", "--radix", "2,2,2"])
        .env("DSNUM_SIZE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8(refused.stderr).unwrap().starts_with("error: "));

    let allowed = binary()
        .args(["tree", "--radix", "2,2,2"])
        .env("DSNUM_SIZE_GUARD", "14")
        .output()
        .unwrap();
    assert_eq!(allowed.status.code(), Some(0));
}

#[test]
fn tables_are_byte_stable() {
    for which in ["1", "2", "3"] {
        for format in ["text", "csv", "json"] {
            let args = ["table", "--which", which, "--format", format];
            let first = binary().args(args).output().unwrap().stdout;
            assert_eq!(first, binary().args(args).output().unwrap().stdout);
            assert_eq!(String::from_utf8(first).unwrap(), dsnum(&args).1);
        }
    }
    let csv = dsnum(&["table", "--which", "2", "--format", "csv"]).1;
    assert_eq!(csv.lines().next(), Some("Decimal,Binary,Distance Binary"));
    assert_eq!(csv.lines().count(), 15);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = dsnum(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

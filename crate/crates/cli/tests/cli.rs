use std::io::Write;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;
use sqdisc::{parse_curves, run_scan, CurveRecord};
use sqdisc_core::Int;

fn sqdisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqdisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn curve_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn classify_json_has_every_field() {
    let out = sqdisc(&["classify", "--short", "-1,0", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in [
        "model",
        "discriminant",
        "discriminant_is_square",
        "sqrt_discriminant",
        "two_torsion_order",
        "mod2_image",
        "torsion",
        "witnesses",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["discriminant"], "64");
    assert_eq!(v["discriminant_is_square"], true);
    assert_eq!(v["sqrt_discriminant"], "8");
    assert_eq!(v["two_torsion_order"], 4);
    assert_eq!(v["mod2_image"], "Id");
    assert_eq!(v["torsion"], "C2xC2");
}

#[test]
fn long_model_input() {
    // Tate normal form with a point of order 5
    let out = sqdisc(&["torsion", "--long", "0,-1,-1,0,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("C5"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&sqdisc(&["classify", "--short", "0,0"])), 2);
    assert_eq!(code(&sqdisc(&["classify", "--short", "1"])), 1);
    assert_eq!(code(&sqdisc(&["classify"])), 1);
    assert_eq!(code(&sqdisc(&["no-such-command"])), 1);
    assert_eq!(code(&sqdisc(&["--help"])), 0);
    assert_eq!(code(&sqdisc(&["family", "e5", "--alpha", "0"])), 2);
    assert_eq!(code(&sqdisc(&["fermat", "decompose", "--xyz", "1,1,2"])), 2);
    assert_eq!(code(&sqdisc(&["family", "ealt", "--params", "0,0,1,0"])), 2);
    assert_eq!(code(&sqdisc(&["scan", "--input", "/nonexistent/curves"])), 2);
}

#[test]
fn family_and_fermat_commands() {
    let out = sqdisc(&["fermat", "decompose", "--xyz", "1,1,1"]);
    assert_eq!(code(&out), 0);
    let p: Vec<i64> = stdout(&out).split_whitespace().map(|t| t.parse().unwrap()).collect();
    assert_eq!(p.len(), 4);
    let out = sqdisc(&["fermat", "param", "--params", &format!("{},{},{},{}", p[0], p[1], p[2], p[3])]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).split_whitespace().collect::<Vec<_>>(), ["1", "1", "1"]);

    let out = sqdisc(&["family", "ealt", "--params", "1,0,1,0", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["discriminant_is_square"], true);
}

#[test]
fn scan_is_deterministic_and_reports_bad_lines() {
    let f = curve_file("# header\nthis is not a curve\nE1 0 0 0 -1 0\n0 0 0 0 0\n0 0 0 0 1\n");
    let path = f.path().to_str().unwrap();
    let first = sqdisc(&["scan", "--input", path, "--json"]);
    let second = sqdisc(&["scan", "--input", path, "--json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["total"], 2);
    let lines: Vec<u64> = v["diagnostics"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["line"].as_u64().unwrap())
        .collect();
    assert_eq!(lines, [2, 4]);
}

#[test]
fn scan_without_records_fails() {
    let f = curve_file("nothing here\n0 0 0 0 0\n");
    assert_eq!(code(&sqdisc(&["scan", "--input", f.path().to_str().unwrap()])), 2);
}

#[test]
fn verify_suites_pass() {
    for suite in ["table", "families", "fermat", "quotient"] {
        let out = sqdisc(&["verify", suite]);
        assert_eq!(code(&out), 0, "{suite}: {}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn scan_proportions_sum_to_one() {
    let parsed = parse_curves(sqdisc::fixtures::TABLE_ROWS);
    let report = run_scan(&parsed.records, parsed.diagnostics).unwrap();
    assert_eq!(report.total, 17);
    assert_eq!(report.counts.values().sum::<u64>(), report.total);
}

fn record() -> impl Strategy<Value = CurveRecord> {
    (
        proptest::option::of("[A-Za-z][A-Za-z0-9_.]{0,8}"),
        proptest::array::uniform5(-1000i64..1000),
        proptest::collection::vec("[a-zA-Z][a-zA-Z0-9]{0,5}", 0..3),
    )
        .prop_filter_map("singular", |(label, a, trailing)| {
            let rec = CurveRecord { label, a: a.map(Int::from), trailing, source_line: 1 };
            let [a1, a2, a3, a4, a6] = rec.a.clone().map(sqdisc_core::Rat::from_integer);
            sqdisc_core::LongModel::new(a1, a2, a3, a4, a6).ok().map(|_| rec)
        })
}

proptest! {
    #[test]
    fn records_round_trip(recs in proptest::collection::vec(record(), 1..6)) {
        let text: String = recs.iter().map(|r| format!("{r}\n")).collect();
        let f = curve_file(&text);
        let parsed = sqdisc::parse_curve_file(f.path()).unwrap();
        prop_assert!(parsed.diagnostics.is_empty());
        prop_assert_eq!(parsed.records.len(), recs.len());
        for (i, (got, want)) in parsed.records.iter().zip(&recs).enumerate() {
            prop_assert_eq!(&got.label, &want.label);
            prop_assert_eq!(&got.a, &want.a);
            prop_assert_eq!(&got.trailing, &want.trailing);
            prop_assert_eq!(got.source_line, i + 1);
        }
    }
}

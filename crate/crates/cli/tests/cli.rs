use std::process::{Command, Output};

use serde_json::Value;

fn invstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--quiet"]);
    let o = invstab(&all);
    let v = serde_json::from_slice(&o.stdout).expect("valid json");
    (o.status.code().unwrap(), v)
}

const F9: [&str; 6] = ["--p", "3", "--e", "2", "--modulus", "2,2,1"];
const F25: [&str; 6] = ["--p", "5", "--e", "2", "--modulus", "2,4,1"];

fn with<'a>(field: &[&'a str], rest: &[&'a str]) -> Vec<&'a str> {
    field.iter().chain(rest).copied().collect()
}

#[test]
fn check_stable_seed_over_f9() {
    let (code, v) = json(&[&["check"][..], &with(&F9, &["--xi", "0,1"])].concat());
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["outcome"], "stable");
    assert_eq!(v["period"], 3);
    assert_eq!(v["witness_n"], Value::Null);
}

#[test]
fn check_unstable_seed_over_f25() {
    let (code, v) = json(&[&["check"][..], &with(&F25, &["--xi", "0,1"])].concat());
    assert_eq!(code, 3);
    assert_eq!(v["outcome"], "unstable");
    assert_eq!(v["witness_n"], 8);
    let rows = v["trace_table"].as_array().unwrap();
    assert_eq!(rows[7]["n"], 8);
    assert_eq!(rows[7]["ratio"], "2,1");
    assert_eq!(rows[7]["trace"], "0");
}

#[test]
fn check_trace_zero_seed_fails_at_one() {
    let (code, v) = json(&["check", "--p", "3", "--e", "3", "--xi", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["trace_xi"], "0");
    assert_eq!(v["witness_n"], 1);
}

#[test]
fn check_output_round_trips() {
    use invstab::report::VerdictRecord;
    for (field, xi) in [(&F9, "0,1"), (&F25, "0,1"), (&F9, "1,1")] {
        let (_, v) = json(&[&["check"][..], &with(field, &["--xi", xi])].concat());
        let rec: VerdictRecord = serde_json::from_value(v.clone()).unwrap();
        let verdict = rec.to_verdict().unwrap();
        assert_eq!(VerdictRecord::from_verdict(&verdict), rec);
        let mut again = serde_json::to_value(&rec).unwrap();
        again["schema"] = 1.into();
        assert_eq!(again, v);
    }
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["check", "--p", "4", "--xi", "1"][..],
        &["check", "--p", "3", "--xi", "1,1"],
        &[
            "check",
            "--p",
            "3",
            "--e",
            "2",
            "--modulus",
            "1,0,1,1",
            "--xi",
            "1",
        ],
        &[
            "check",
            "--p",
            "3",
            "--e",
            "2",
            "--modulus",
            "1,1",
            "--xi",
            "1",
        ],
        &["check", "--p", "3"],
        &["verify", "--p", "3", "--suite", "nonsense"],
        &["verify", "--p", "3", "--suite", "agou"],
    ] {
        let o = invstab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn search_covers_the_whole_field() {
    let (code, v) = json(&[&["search"][..], &F9].concat());
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let w = rows.iter().find(|r| r["xi"] == "0,1").unwrap();
    assert_eq!(w["outcome"], "stable");

    let (_, v) = json(&["search", "--p", "2"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["xi"], "0");
    assert_eq!(rows[0]["outcome"], "unstable");
    assert_eq!(rows[0]["witness_n"], 1);
    assert_eq!(rows[1]["xi"], "1");

    let (_, v) = json(&["search", "--p", "3"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[1]["outcome"], "stable");
    assert_eq!(rows[2]["outcome"], "stable");
}

#[test]
fn search_is_deterministic_and_csv_has_a_row_per_seed() {
    let args = [
        "search", "--p", "5", "--e", "2", "--format", "csv", "--quiet",
    ];
    let a = invstab(&args);
    let b = invstab(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 26);
    assert!(text.starts_with("xi,trace_xi,outcome,"));
}

#[test]
fn generate_emits_irreducible_denominator() {
    let (code, v) = json(
        &[
            &["generate"][..],
            &with(&F9, &["--xi", "0,1", "--n", "2", "--verify"]),
        ]
        .concat(),
    );
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 9);
    assert_eq!(v["criterion_irreducible"], true);
    assert_eq!(v["rabin_irreducible"], true);

    let (code, v) = json(&[&["generate"][..], &with(&F9, &["--xi", "0,1", "--n", "1"])].concat());
    assert_eq!(code, 0);
    assert_eq!(v["pretty"], "X^3 + (2,0)X + (0,1)");
    assert_eq!(v["rabin_irreducible"], Value::Null);
}

#[test]
fn generate_flags_reducible_denominator() {
    // Tr(1) = 0 in F_27, so X^3 - X + 1 splits
    let (code, v) = json(&[
        "generate", "--p", "3", "--e", "3", "--xi", "1", "--n", "1", "--verify",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["criterion_irreducible"], false);
    assert_eq!(v["rabin_irreducible"], false);
}

#[test]
fn generate_above_cap_exits_with_two() {
    let o = invstab(&["generate", "--p", "5", "--xi", "1", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    let o = invstab(&[
        "generate", "--p", "5", "--xi", "1", "--n", "6", "--cap", "100000", "--quiet",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_suites_agree() {
    for args in [
        &[
            "verify",
            "--suite",
            "criterion",
            "--p",
            "3",
            "--e",
            "2",
            "--nmax",
            "3",
        ][..],
        &["verify", "--suite", "mobius", "--p", "5"],
        &[
            "verify",
            "--suite",
            "artin-schreier",
            "--p",
            "2",
            "--e",
            "3",
        ],
        &["verify", "--p", "2", "--e", "2"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["agree"], true);
        assert!(!v["reports"].as_array().unwrap().is_empty());
    }
}

#[test]
fn trace_table_matches_closed_form() {
    let o = invstab(&[
        "trace-table",
        "--p",
        "3",
        "--xi",
        "1",
        "--nmax",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let traces: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(traces, ["1", "2", "2", "2", "2"]);
}

#[test]
fn trace_table_f9_text_layout() {
    let o = invstab(
        &[
            &["trace-table"][..],
            &with(&F9, &["--xi", "0,1", "--nmax", "8"]),
        ]
        .concat(),
    );
    let text = stdout(&o);
    let lines: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(lines[0], ["n", "a", "c", "d", "a/c", "Tr"]);
    assert_eq!(lines[1], ["1", "0,1", "1,0", "0,0", "0,1", "1"]);
    assert_eq!(lines[2], ["2", "2,0", "0,1", "2,0", "1,2", "1"]);
    assert_eq!(lines[4], ["4", "2,2", "2,2", "2,2", "1,0", "2"]);
    assert_eq!(lines[8], ["8", "1,0", "0,2", "1,0", "1,2", "1"]);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("invstab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verdict.json");
    let o = invstab(&[
        "check",
        "--p",
        "3",
        "--xi",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["outcome"], "stable");
    std::fs::remove_dir_all(dir).unwrap();
}

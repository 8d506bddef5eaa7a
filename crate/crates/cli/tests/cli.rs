use std::process::{Command, Output};

use jhankel::automaton::Dfao;
use jhankel::closed_form::Column;
use jhankel::UnitOrZero;

fn jhankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jhankel"))
        .args(args)
        .env_remove("HANKEL_ORACLE_CAP")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn seq_outputs() {
    let out = jhankel(&["seq", "c", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,1\n1,J\n2,0\n3,J\n4,J^2\n");

    assert_eq!(stdout(&jhankel(&["seq", "s", "1"])), "0,-J^2\n");
    assert_eq!(
        stdout(&jhankel(&["seq", "s", "1", "--header"])),
        "n,value\n0,-J^2\n"
    );

    let out = jhankel(&["seq", "c", "0"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());

    let out = jhankel(&["seq", "c", "4", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let values: Vec<&str> = json["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "J", "0", "J"]);

    assert_eq!(
        stdout(&jhankel(&["seq", "c", "3", "--format", "plain"])),
        "0 1\n1 J\n2 0\n"
    );
}

#[test]
fn seq_usage_errors() {
    for args in [
        &["seq", "c", "-1"][..],
        &["seq", "x", "3"],
        &["seq", "c"],
        &["seq", "c", "1e3"],
    ] {
        assert_eq!(code(&jhankel(args)), 2, "{args:?}");
    }
}

#[test]
fn det_examples() {
    let out = jhankel(&["det", "H", "--p", "0", "--n", "5", "--method", "both"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "J J ok\n");

    assert_eq!(
        stdout(&jhankel(&[
            "det", "H", "--p", "2", "--n", "4", "--method", "fast"
        ])),
        "0\n"
    );
    assert_eq!(
        stdout(&jhankel(&[
            "det", "H", "--p", "2", "--n", "4", "--method", "both"
        ])),
        "0 0 ok\n"
    );
    assert_eq!(
        stdout(&jhankel(&[
            "det", "Sigma", "--p", "0", "--n", "5", "--method", "brute"
        ])),
        "-1\n"
    );

    let a = jhankel(&["det", "H", "--p", "0", "--n", "10^30", "--method", "fast"]);
    let b = jhankel(&[
        "det",
        "H",
        "--p",
        "0",
        "--n",
        "1000000000000000000000000000000",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let value = stdout(&a);
    assert!(value.trim().parse::<UnitOrZero>().is_ok(), "{value}");
}

#[test]
fn det_cap_and_usage() {
    let out = Command::new(env!("CARGO_BIN_EXE_jhankel"))
        .args(["det", "H", "--p", "0", "--n", "20", "--method", "brute"])
        .env("HANKEL_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        code(&jhankel(&[
            "det", "H", "--p", "0", "--n", "10^18", "--method", "brute"
        ])),
        2
    );
    assert_eq!(code(&jhankel(&["det", "H", "--p", "0", "--n", "1e18"])), 2);
    assert_eq!(code(&jhankel(&["det", "Q", "--p", "0", "--n", "1"])), 2);
    assert_eq!(code(&jhankel(&["det", "H", "--n", "1"])), 2);
}

#[test]
fn det_formats() {
    let out = jhankel(&[
        "det", "Sigma", "--p", "1", "--n", "4", "--method", "both", "--format", "csv", "--header",
    ]);
    assert_eq!(
        stdout(&out),
        "family,p,n,fast,brute,status\nSigma,1,4,J^2,J^2,ok\n"
    );
    let out = jhankel(&["det", "H", "--p", "1", "--n", "2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["values"][0]["value"], "J^2");
}

#[test]
fn verify_suites() {
    let out = jhankel(&["verify", "theorem-tables"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("12/12"));
    assert!(!text.contains("FAIL"));

    let out = jhankel(&[
        "verify", "lemma", "--n-max", "4", "--p-max", "4", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["ok"], true);
    assert_eq!(json["values"].as_array().unwrap().len(), 18);

    assert_eq!(
        code(&jhankel(&[
            "verify", "blocks", "--n-max", "3", "--p-max", "3"
        ])),
        0
    );
    assert_eq!(code(&jhankel(&["verify", "nonsense"])), 2);
}

#[test]
fn verify_failure_exits_one() {
    // The lemma needs order 3*4+2 = 14; a cap of 5 makes the oracle refuse.
    let out = Command::new(env!("CARGO_BIN_EXE_jhankel"))
        .args(["verify", "lemma", "--n-max", "4", "--p-max", "1"])
        .env("HANKEL_ORACLE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("verification failed"));
}

#[test]
fn automaton_export() {
    let out = jhankel(&["automaton", "h1", "729"]);
    assert_eq!(code(&out), 0);
    let dfao = Dfao::from_json(&stdout(&out)).unwrap();
    assert!(dfao.states.len() <= 12);
    assert!((0..729).all(|n| dfao.run_u64(n) == Column::H1.value_u64(n)));

    let out = jhankel(&["automaton", "s1", "729"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["digit_order"], "lsd");

    let out = jhankel(&["automaton", "h0", "81"]);
    assert!(matches!(code(&out), 0 | 4));

    assert_eq!(code(&jhankel(&["automaton", "h0", "80"])), 2);
    assert_eq!(code(&jhankel(&["automaton", "x", "729"])), 2);
}

#[test]
fn bench_rows() {
    let out = jhankel(&["bench", "9,27,81", "--p", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json["values"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(row["fast"], row["brute"]);
        assert!(row["speedup"].is_number());
    }

    let out = jhankel(&["bench", "10^18", "--p", "7"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("skipped"));

    assert_eq!(code(&jhankel(&["bench", ""])), 2);
    assert_eq!(code(&jhankel(&["bench", "9,,27"])), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["seq", "s", "50", "--format", "json"][..],
        &["det", "Sigma", "--p", "10^9", "--n", "10^18"],
        &["automaton", "s0", "243"],
        &["verify", "theorem-tables", "--format", "csv"],
    ] {
        assert_eq!(jhankel(args).stdout, jhankel(args).stdout, "{args:?}");
    }
}

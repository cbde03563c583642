use std::process::Command;

use kfc_cli::{parse_partition, run};

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["kfc"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn kostka_methods() {
    let def = ok(&[
        "kostka", "--method", "def", "-n", "3", "--lambda", "2,2,0", "--mu", "0,0,0",
    ]);
    assert_eq!(def, "q^2 + 2*q^4 + 2*q^6 + q^8\n");
    assert_eq!(
        ok(&["kostka", "--method", "charge", "-n", "3", "--lambda", "2,2,0", "--mu", "0,0,0"]),
        def
    );
    assert_eq!(
        ok(&["kostka", "-n", "3", "--lambda", "0,0,0", "--mu", "0,0,0"]),
        "1\n"
    );
    assert_eq!(
        ok(&["kostka", "--method", "row", "-n", "2", "--lambda", "2,0", "--mu", "0,0"]),
        "q + q^3\n"
    );
    assert_eq!(
        ok(&["kostka", "--method", "morris", "-n", "2", "--lambda", "2,0", "--mu", "1,1"]),
        "q\n"
    );
    assert_eq!(
        ok(&["kostka", "-n", "3", "--lambda", "2,2,0", "--mu", "0,0,0", "--format", "json"]),
        "{\"poly\":{\"2\":1,\"4\":2,\"6\":2,\"8\":1}}\n"
    );
}

#[test]
fn charge_and_insert() {
    assert_eq!(ok(&["charge", "-n", "3", "--tableau", "-2,-1;1,2"]), "4\n");
    assert_eq!(
        ok(&["charge", "-n", "3", "--tableau", "-3,-2,1;-3,-1", "--chain"]),
        "start -3,-2,1;-3,-1\nreduce -3,2;-2\ncocycle -3,-2;2\ncocycle -3,-2,2\nreduce -3,3\n2\n"
    );
    assert_eq!(
        ok(&["insert", "--tableau", "-1,1,3;1,2;2", "--letter", "1,2"]),
        "-2,1,2;1,2,3;2;2\n"
    );
    assert_eq!(
        ok(&["insert", "--letter", "2", "--letter", "-2", "--letter", "-1", "--letter", "1"]),
        "-2,-1,1;2\n"
    );
}

#[test]
fn graphs() {
    let dot = ok(&["cyclage-graph", "--tableau", "-2,-1;1,2"]);
    assert_eq!(
        dot,
        "digraph cyclage {\n  v0 [label=\"-2,-1,1,2\"];\n  v1 [label=\"-2,-1;1,2\"];\n  v2 [label=\"-2,-1,1;2\"];\n  v1 -> v2;\n  v2 -> v0;\n}\n"
    );
    let single = ok(&["cyclage-graph", "--tableau", "-3"]);
    assert_eq!(single.matches("label=").count(), 1);
    assert_eq!(single.matches("->").count(), 0);
    let big = ok(&["cyclage-graph", "--tableau", "-1;-1;1;1"]);
    assert_eq!(
        (big.matches("label=").count(), big.matches("->").count()),
        (10, 9)
    );
    let json = ok(&[
        "cyclage-graph",
        "--tableau",
        "-2,-1;1,2",
        "--format",
        "json",
    ]);
    assert_eq!(
        json,
        "{\"vertices\":[\"-2,-1,1,2\",\"-2,-1;1,2\",\"-2,-1,1;2\"],\"edges\":[[1,2],[2,0]]}\n"
    );
}

#[test]
fn verify_outputs() {
    let sweep = ok(&["verify", "-n", "2", "--max-weight", "4"]);
    assert!(sweep.starts_with("checked: "));
    assert!(sweep.contains("mismatches: 0\n"));
    let one = ok(&["verify", "-n", "3", "--lambda", "2,2,0", "--mu", "0,0,0"]);
    assert!(one.contains("k_charge: q^2 + 2*q^4 + 2*q^6 + q^8\n"));
    assert!(one.ends_with("verdict: match\n"));
    let fundamental = ok(&[
        "verify",
        "-n",
        "3",
        "--fundamental",
        "1",
        "--format",
        "json",
    ]);
    assert!(fundamental.contains("\"verdict\":\"match\""));
}

#[test]
fn errors_exit_with_one() {
    for args in [
        &["kostka", "-n", "3", "--lambda", "1,2,0", "--mu", "0,0,0"][..],
        &["kostka", "-n", "3", "--lambda", "2,2", "--mu", "0,0,0"],
        &[
            "kostka", "--method", "row", "-n", "2", "--lambda", "1,1", "--mu", "0,0",
        ],
        &[
            "kostka", "--method", "morris", "-n", "2", "--lambda", "2,2", "--mu", "1,1",
        ],
        &["charge", "-n", "3", "--tableau", "-1,2"],
        &["charge", "-n", "3", "--tableau", "2,1"],
        &["insert", "--letter", "0"],
        &["verify", "-n", "3", "--fundamental", "0"],
        &["verify", "-n", "3"],
        &["nonsense"],
    ] {
        let mut argv = vec!["kfc"];
        argv.extend_from_slice(args);
        let out = run(argv);
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.is_empty());
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}: {}", out.stderr);
    }
}

#[test]
fn partitions_parse() {
    assert_eq!(parse_partition("3, 1,0", 3).unwrap().coords(), &[3, 1, 0]);
    assert!(parse_partition("1,-1", 2).is_err());
    assert!(parse_partition("a", 1).is_err());
}

#[test]
fn output_is_deterministic() {
    let args = ["kfc", "cyclage-graph", "--tableau", "-3;-3;-2;-1;1"];
    assert_eq!(run(args), run(args));
    let args = [
        "kfc",
        "verify",
        "-n",
        "2",
        "--max-weight",
        "6",
        "--format",
        "json",
    ];
    assert_eq!(run(args), run(args));
}

#[test]
fn binary_honours_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_kfc");
    let out = Command::new(bin)
        .args(["verify", "-n", "2", "--max-weight", "4"])
        .env("KFC_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("mismatches: 0"));
    let bad = Command::new(bin)
        .args(["verify", "-n", "2", "--max-weight", "4"])
        .env("KFC_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

use std::io::Write;
use std::process::{Command, Output};

use degentropy::Envelope;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_degentropy"));
    c.env_remove("DEGENTROPY_PRECISION");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn entropy_of_triangle_and_star() {
    let tri = graph_file("3 3\n0 1\n0 2\n1 2\n");
    let o = run(&["entropy", tri.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("I(G) = 1.098612"));

    let star = graph_file("5 4\n0 1\n0 2\n0 3\n0 4\n");
    let o = run(&["entropy", star.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("I(G) = 1.386294"));
    assert!(stdout(&o).contains("degree sequence = (4,1,1,1,1)"));
}

#[test]
fn malformed_files_exit_with_input_error() {
    let dup = graph_file("3 2\n0 1\n1 0\n");
    let o = run(&["entropy", dup.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("line 3") && err.contains("duplicate edge"),
        "{err}"
    );

    let o = run(&["entropy", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(3));

    let empty = graph_file("4 0\n");
    let o = run(&["entropy", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["search", "--m", "0", "--c", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["search", "--m", "5"]).status.code(), Some(2));
    assert_eq!(
        run(&["search", "--m", "5", "--c", "1", "--pad", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["search", "--m", "3", "--c", "1", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    let o = run(&["construct", "--n", "7", "--m", "30"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("6 <= m <= 11"));
    assert_eq!(
        run(&["cross-validate", "--n-max", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn search_text_flags_ties_and_csv_has_fixed_columns() {
    let o = run(&["search", "--m", "5", "--c", "1"]);
    let text = stdout(&o);
    assert!(
        text.contains("TIE") && text.contains("16·ln2 + 6·ln3"),
        "{text}"
    );
    assert!(text.contains("(5,1,1,1,1,1)") && text.contains("(3,3,2,2)"));

    let o = run(&["search", "--m", "5", "--c", "1", "--format", "csv"]);
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("m,c,rank,degree_sequence,value_decimal,value_exact,tie")
    );
    assert_eq!(lines.clone().count(), 2);
    assert!(lines.all(|l| l.ends_with(",true")));

    let o = run(&["search", "--m", "3", "--c", "0", "--format", "csv"]);
    assert!(stdout(&o).contains("\"(2,2,2)\""));
    let o = run(&["search", "--m", "6", "--c", "2"]);
    assert!(stdout(&o).contains("#1 (6,1,1,1,1,1,1)"));
    let o = run(&["search", "--m", "4", "--c", "1"]);
    assert!(stdout(&o).contains("DISCREPANCY"));
}

#[test]
fn json_has_fixed_schema_and_round_trips() {
    for args in [
        vec!["search", "--m", "5", "--c", "1"],
        vec!["construct", "--n", "8", "--m", "12"],
        vec!["oracle", "--n", "6", "--m", "7"],
        vec![
            "verify-claims",
            "--b-max",
            "5",
            "--c-max",
            "2",
            "--m-max",
            "30",
        ],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let o = run(&full);
        assert!(o.status.success(), "{args:?}");
        let raw = stdout(&o);
        let v: Value = serde_json::from_str(&raw).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "params", "results", "version"]);
        assert_eq!(v["command"], args[0]);
        assert!(v["results"].is_array());
        let env: Envelope = serde_json::from_str(&raw).unwrap();
        assert_eq!(serde_json::to_string_pretty(&env).unwrap() + "\n", raw);
    }
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "json", "csv"] {
        let args = [
            "verify-claims",
            "--b-max",
            "6",
            "--c-max",
            "3",
            "--m-max",
            "50",
            "--format",
            format,
        ];
        assert_eq!(run(&args).stdout, run(&args).stdout, "{format}");
        let args = ["cross-validate", "--n-max", "8", "--format", format];
        assert_eq!(run(&args).stdout, run(&args).stdout, "{format}");
    }
}

#[test]
fn precision_flag_overrides_environment() {
    let tri = graph_file("3 3\n0 1\n0 2\n1 2\n");
    let path = tri.path().to_str().unwrap();
    let o = bin()
        .args(["entropy", path])
        .env("DEGENTROPY_PRECISION", "3")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("I(G) = 1.099\n"));
    let o = bin()
        .args(["entropy", path, "--precision", "9"])
        .env("DEGENTROPY_PRECISION", "3")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("I(G) = 1.098612289\n"));
    let o = bin()
        .args(["entropy", path])
        .env("DEGENTROPY_PRECISION", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constructions_print_edge_lists() {
    let o = run(&["construct", "--n", "7", "--m", "7"]);
    let text = stdout(&o);
    assert!(text.contains("degree sequence (6,2,2,1,1,1,1)"), "{text}");
    assert!(text.contains("\n7 7\n0 1\n"));

    let o = run(&["construct", "--n", "8", "--m", "12", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn cross_validate_and_verify_claims_succeed() {
    let o = run(&["cross-validate", "--n-max", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("0 mismatches\n"));

    let o = run(&["verify-claims"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("0.179395 (= 0.18 ± 0.01)"));
    assert!(text.contains("0 inconsistent with expectation"));

    let o = run(&["verify-claims", "--c-max", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "boundary-gap-positive[b=3,c=1]")
        .unwrap();
    assert_eq!(r["expectation"], "fails");
    assert_eq!(r["status"], "failed");
    assert_eq!(r["consistent"], true);

    // a grid too short for the monotonicity check is a verification failure
    assert_eq!(
        run(&["verify-claims", "--m-max", "5"]).status.code(),
        Some(1)
    );
}

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn ncspan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncspan"))
        .args(args)
        .env_remove("NCSPAN_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn classify_commutator() {
    let out = ncspan(&["classify", "--poly", "X1*X2-X2*X1", "--dim", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], "ncspan/1");
    assert_eq!(v["polynomial"], "X1*X2 - X2*X1");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["classification"], "TRACE_ZERO");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert!(v["witnesses"].as_array().is_some());
    assert!(v["samples_used"].as_u64().unwrap() > 0);
    assert_eq!(v["consistency_flags"]["lie_ideal"], true);
    assert_eq!(v["consistency_flags"]["commutator_criterion"], "holds");
}

#[test]
fn classify_text_format() {
    let out = ncspan(&["classify", "--poly", "X1", "--dim", "3", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("classification: FULL"), "{text}");
    assert!(text.contains("rank: 9"), "{text}");
}

#[test]
fn seed_from_environment_matches_flag() {
    let flag = ncspan(&[
        "classify",
        "--poly",
        "X1*X1 + X2",
        "--dim",
        "2",
        "--seed",
        "7",
    ]);
    let env = Command::new(env!("CARGO_BIN_EXE_ncspan"))
        .args(["classify", "--poly", "X1*X1 + X2", "--dim", "2"])
        .env("NCSPAN_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(code(&flag), 0);
    assert_eq!(flag.stdout, env.stdout);
    assert_eq!(json(&flag)["seed"], 7);
}

#[test]
fn exhausted_budget_is_undetermined() {
    let out = ncspan(&[
        "classify",
        "--poly",
        "X1*X1*X2 - X2*X1*X1",
        "--dim",
        "2",
        "--max-samples",
        "3",
    ]);
    assert_eq!(code(&out), 64);
    assert_eq!(json(&out)["classification"], "UNDETERMINED");
}

#[test]
fn commtest_reports_obstruction() {
    let out = ncspan(&["commtest", "--poly", "X1"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["sum_of_commutators"], false);
    assert_eq!(v["witness_class"], "X1");
    assert_eq!(v["class_sum"], "1");

    let out = ncspan(&["commtest", "--poly", "X1*X2*X3 - X3*X1*X2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["sum_of_commutators"], true);
}

#[test]
fn witness_dimension() {
    let out = ncspan(&["witness", "--poly", "X1", "--dmax", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["witness_dimension"], 2);

    let out = ncspan(&["witness", "--poly", "[X1,X2]^2", "--dmax", "4"]);
    assert_eq!(json(&out)["witness_dimension"], 3);

    let s4 = "X1*X2*X3*X4 - X1*X2*X4*X3 - X1*X3*X2*X4 + X1*X3*X4*X2 + X1*X4*X2*X3 - X1*X4*X3*X2 \
              - X2*X1*X3*X4 + X2*X1*X4*X3 + X2*X3*X1*X4 - X2*X3*X4*X1 - X2*X4*X1*X3 + X2*X4*X3*X1 \
              + X3*X1*X2*X4 - X3*X1*X4*X2 - X3*X2*X1*X4 + X3*X2*X4*X1 + X3*X4*X1*X2 - X3*X4*X2*X1 \
              - X4*X1*X2*X3 + X4*X1*X3*X2 + X4*X2*X1*X3 - X4*X2*X3*X1 - X4*X3*X1*X2 + X4*X3*X2*X1";
    let out = ncspan(&["witness", "--poly", s4, "--dmax", "2"]);
    assert_eq!(code(&out), 1);
    assert!(json(&out)["witness_dimension"].is_null());
}

#[test]
fn linearize_square() {
    let out = ncspan(&["linearize", "--poly", "X1^2", "--dim", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["output"], "X1*X2 + X2*X1");
    assert_eq!(v["multilinear"], true);
    assert_eq!(v["steps"][0]["kind"], "DELTA");
    assert_eq!(v["steps"][0]["variable"], 1);
}

#[test]
fn linearize_rejects_central_input() {
    let out = ncspan(&["linearize", "--poly", "[X1,X2]^2", "--dim", "2"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn decompose_targets() {
    let out = ncspan(&[
        "decompose",
        "--poly",
        "[X1,X2]",
        "--dim",
        "2",
        "--target",
        "0,1;0,0",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["reconstruction"], v["target"]);

    let out = ncspan(&[
        "decompose",
        "--poly",
        "[X1,X2]",
        "--dim",
        "2",
        "--target",
        "-1/2,0;0,1/2",
    ]);
    assert_eq!(code(&out), 0);

    let out = ncspan(&[
        "decompose",
        "--poly",
        "[X1,X2]",
        "--dim",
        "2",
        "--target",
        "1,0;0,1",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn suite_over_corpus_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "# consistency corpus\n[X1,X2]\n\n[X1,X2]^2   # central\nX1*X1 + X2"
    )
    .unwrap();
    let out = ncspan(&[
        "suite",
        "--corpus",
        file.path().to_str().unwrap(),
        "--dim",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["summary"]["polynomials"], 3);
    assert_eq!(v["summary"]["violations"], 0);
    assert_eq!(v["summary"]["exclusion_inapplicable"], 1);
    let lines: Vec<u64> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["line"].as_u64().unwrap())
        .collect();
    assert_eq!(lines, [2, 4, 5]);
}

#[test]
fn usage_errors() {
    assert_eq!(
        code(&ncspan(&["classify", "--poly", "X1 +", "--dim", "2"])),
        2
    );
    assert_eq!(
        code(&ncspan(&["classify", "--poly", "X1", "--dim", "0"])),
        2
    );
    assert_eq!(
        code(&ncspan(&["classify", "--poly", "X0", "--dim", "2"])),
        2
    );
    assert_eq!(code(&ncspan(&["classify", "--poly", "X1"])), 2);
    assert_eq!(
        code(&ncspan(&[
            "decompose",
            "--poly",
            "X1",
            "--dim",
            "2",
            "--target",
            "1,2;3"
        ])),
        2
    );
    assert_eq!(
        code(&ncspan(&[
            "suite",
            "--corpus",
            "/nonexistent/corpus.txt",
            "--dim",
            "2"
        ])),
        2
    );
    let out = ncspan(&["classify", "--poly", "X1*(X2", "--dim", "2"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot parse"));
}

#[test]
fn printed_form_with_leading_minus_is_accepted() {
    let out = ncspan(&["commtest", "--poly", "-X1*X2 + X2*X1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["polynomial"], "-X1*X2 + X2*X1");
}

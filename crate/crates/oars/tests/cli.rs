//! End-to-end checks of the `oars` binary: piping between subcommands,
//! exit-code conventions, and output determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn oars(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_oars"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn oars");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait for oars")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_pipes_into_verify() {
    let built = oars(&["construct", "rao-hamming", "--s", "3", "--n", "2"], None);
    assert!(built.status.success());
    let array = stdout(&built);
    assert!(array.starts_with("9 4\n"));

    let ok = oars(&["verify", "strength", "--t", "2"], Some(&array));
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "true\n");

    let no = oars(&["verify", "strength", "--t", "3"], Some(&array));
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "false\n");
}

#[test]
fn hadamard_formats_and_verification() {
    let pm = oars(
        &["construct", "paley1", "--q", "11", "--format", "pm"],
        None,
    );
    assert!(pm.status.success());
    let matrix = stdout(&pm);
    assert_eq!(matrix.lines().count(), 12);

    let ok = oars(&["verify", "hadamard"], Some(&matrix));
    assert_eq!(ok.status.code(), Some(0));

    let oa = oars(&["construct", "paley1", "--q", "11"], None);
    assert!(stdout(&oa).starts_with("12 11\n"));
}

#[test]
fn metrics_and_bound_outputs() {
    let array = oars(&["construct", "paley1", "--q", "11"], None);
    let gr = oars(&["metrics", "gr"], Some(&stdout(&array)));
    assert!(gr.status.success());
    assert_eq!(stdout(&gr), "11/3\n");

    let reg = oars(&["metrics", "regular"], Some(&stdout(&array)));
    assert_eq!(reg.status.code(), Some(1));
    assert_eq!(stdout(&reg), "false\n");

    let bound = oars(&["bound", "4", "2", "3"], None);
    assert!(bound.status.success());
    let text = stdout(&bound);
    assert!(text.contains("rao 8\n"));
    assert!(text.contains("admissible 8\n"));
}

#[test]
fn sample_is_deterministic_and_study_prints_a_table() {
    let args = &[
        "sample", "--method", "lhs", "--n", "8", "--k", "3", "--seed", "7",
    ];
    let first = oars(args, None);
    let second = oars(args, None);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(stdout(&first).lines().count(), 8);

    let array = oars(&["construct", "ds-expand", "--s", "3"], None);
    let dir = std::env::temp_dir().join("oars-cli-test-oa.txt");
    std::fs::write(&dir, stdout(&array)).unwrap();
    let study = oars(
        &[
            "study",
            "--oa",
            dir.to_str().unwrap(),
            "--replicates",
            "50",
            "--seed",
            "1",
        ],
        None,
    );
    assert!(study.status.success());
    let table = stdout(&study);
    assert!(table.contains("random"));
    assert!(table.contains("lhs"));
    assert!(table.contains("oa_lhs"));
}

#[test]
fn errors_use_exit_code_two() {
    let bad_input = oars(&["verify", "strength", "--t", "2"], Some("not an array\n"));
    assert_eq!(bad_input.status.code(), Some(2));
    assert!(!String::from_utf8(bad_input.stderr).unwrap().is_empty());

    let bad_usage = oars(&["bound", "4"], None);
    assert_eq!(bad_usage.status.code(), Some(2));

    let bad_params = oars(&["construct", "paley1", "--q", "13"], None);
    assert_eq!(bad_params.status.code(), Some(2));
}

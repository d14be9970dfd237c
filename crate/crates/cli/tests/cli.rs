//! End-to-end tests against the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn gucycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gucycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn build_then_verify_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.guc");
    let build = gucycle(&[
        "build",
        "--family",
        "permutations",
        "--n",
        "4",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(build.status.success(), "{}", stderr_of(&build));

    let verify = gucycle(&["verify", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(
        stdout_of(&verify).contains("valid, 24 windows"),
        "{}",
        stdout_of(&verify)
    );
}

#[test]
fn degenerate_parameters_exit_2() {
    let output = gucycle(&["build", "--family", "subsets", "--n", "6", "--k", "6"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr_of(&output).contains("degenerate parameters"),
        "{}",
        stderr_of(&output)
    );
}

#[test]
fn unknown_flags_exit_2() {
    let output = gucycle(&["build", "--no-such-flag"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn string_emits_ten_symbols_for_the_size_2_to_3_range() {
    let output = gucycle(&[
        "string", "--length", "4", "--alphabet", "2", "--min", "2", "--max", "3",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output).trim().len(), 10);
}

#[test]
fn fixed_weight_string_fails_with_exit_1() {
    let output = gucycle(&[
        "string", "--length", "4", "--alphabet", "2", "--min", "2", "--max", "2",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("not weakly connected"));
}

#[test]
fn enumerate_lists_subsets_in_order() {
    let output = gucycle(&["enumerate", "--family", "subsets", "--n", "6", "--k", "2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 15);
    assert_eq!(lines[0], "{1,2}");
    assert_eq!(lines[14], "{5,6}");
}

#[test]
fn enumerate_formats_each_family() {
    let involutions = gucycle(&["enumerate", "--family", "involutions", "--n", "4"]);
    let text = stdout_of(&involutions);
    assert!(text.lines().any(|l| l == "(12)(3)(4)"), "{text}");
    assert_eq!(text.lines().count(), 10);

    let partitions = gucycle(&["enumerate", "--family", "partitions", "--n", "4"]);
    let text = stdout_of(&partitions);
    assert!(text.lines().any(|l| l == "134|2"), "{text}");
    assert_eq!(text.lines().count(), 15);
}

#[test]
fn string_verify_accepts_known_vectors() {
    let output = gucycle(&[
        "string-verify",
        "--word",
        "112233",
        "--window",
        "2",
        "--mode",
        "window-multiset",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    assert!(stdout_of(&output).contains("valid, 6 windows"));

    let output = gucycle(&[
        "string-verify",
        "--word",
        "124324",
        "--window",
        "3",
        "--mode",
        "order-iso",
    ]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn string_verify_rejects_short_words_with_exit_1() {
    let output = gucycle(&[
        "string-verify",
        "--word",
        "111000",
        "--window",
        "3",
        "--mode",
        "exact-word",
        "--alphabet",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout_of(&output).contains("INVALID"));
}

#[test]
fn seed_figures_passes() {
    let output = gucycle(&["--seed-figures"]);
    assert_eq!(output.status.code(), Some(0), "{}", stdout_of(&output));
    let text = stdout_of(&output);
    assert!(text.contains("13/13 checks passed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn builds_are_byte_identical_across_processes() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.guc");
    let second = dir.path().join("second.guc");
    for path in [&first, &second] {
        let output = gucycle(&[
            "build",
            "--family",
            "partitions",
            "--n",
            "5",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
}

#[test]
fn tampered_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("host.guc");
    let build = gucycle(&[
        "build",
        "--family",
        "involutions",
        "--n",
        "4",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(build.status.success());

    // drop one edge line: still parseable, no longer a universal cycle
    let text = std::fs::read_to_string(&path).unwrap();
    let edge = text
        .lines()
        .find(|line| line.starts_with("e "))
        .unwrap()
        .to_string();
    let tampered = text.replacen(&format!("{edge}\n"), "", 1);
    std::fs::write(&path, tampered).unwrap();
    let verify = gucycle(&["verify", path.to_str().unwrap(), "--quiet"]);
    assert_eq!(verify.status.code(), Some(1));

    // and a malformed file is a usage-class failure
    std::fs::write(&path, "guc 2\n").unwrap();
    let verify = gucycle(&["verify", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(2));
}

#[test]
fn emit_windows_lists_objects_in_cycle_order() {
    let output = gucycle(&[
        "build",
        "--family",
        "partitions",
        "--n",
        "3",
        "--emit-windows",
        "-o",
        "/dev/null",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "123");
    let mut sorted = lines.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, ["123", "12|3", "13|2", "1|23", "1|2|3"]);
}

#[test]
fn dot_output_draws_the_host() {
    let output = gucycle(&["build", "--family", "permutations", "--n", "3", "--dot", "-o", "/dev/null"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.starts_with("graph gucycle {"), "{text}");
    assert_eq!(text.matches(" -- ").count(), 6);
}

#[test]
fn verify_jobs_flag_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("host.guc");
    gucycle(&[
        "build",
        "--family",
        "permutations",
        "--n",
        "5",
        "-o",
        path.to_str().unwrap(),
    ]);
    let verify = gucycle(&["verify", path.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout_of(&verify).contains("valid, 120 windows"));
}

#[test]
fn missing_file_exits_2() {
    let missing = Path::new("/nonexistent/gucycle/file.guc");
    let output = gucycle(&["verify", missing.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

//! Golden-file tests for the command-line surface: byte-exact outputs and
//! the exit-code contract (0 success/equal, 1 not equal, 2 error).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn write_term(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobspan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn normalize_handle_homotopy_and_strict() {
    let dir = tempfile::tempdir().unwrap();
    let handle = write_term(dir.path(), "handle.frob", "comult ; mult\n");
    let path = handle.to_str().unwrap();

    let out = run(&["normalize", path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "open in={0} out={0} b=1\n");

    let out = run(&["normalize", path, "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "open in={0} out={0} b=0\n");
}

#[test]
fn normalize_empty_identity_prints_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write_term(dir.path(), "empty.frob", "id0\n");
    let out = run(&["normalize", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn eq_exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let handle = write_term(dir.path(), "handle.frob", "comult ; mult\n");
    let identity = write_term(dir.path(), "id.frob", "id1\n");
    let (handle, identity) = (handle.to_str().unwrap(), identity.to_str().unwrap());

    assert_eq!(run(&["eq", handle, identity]).status.code(), Some(1));
    assert_eq!(
        run(&["eq", handle, identity, "--strict"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["eq", handle, handle]).status.code(), Some(0));
}

#[test]
fn eq_with_unequal_arities_is_not_equal() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_term(dir.path(), "a.frob", "mult\n");
    let b = write_term(dir.path(), "b.frob", "comult\n");
    assert_eq!(
        run(&["eq", a.to_str().unwrap(), b.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn eval_handle_over_dual_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let handle = write_term(dir.path(), "handle.frob", "comult ; mult\n");
    let out = run(&[
        "eval",
        handle.to_str().unwrap(),
        "--algebra",
        "dual_numbers",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 0\n2 0\n");
}

#[test]
fn eval_sphere_over_split_is_two() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = write_term(dir.path(), "sphere.frob", "unit ; counit\n");
    let out = run(&["eval", sphere.to_str().unwrap(), "--algebra", "split"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn eval_identity_is_the_identity_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let id = write_term(dir.path(), "id.frob", "id1\n");
    let out = run(&["eval", id.to_str().unwrap(), "--algebra", "truncated_cubic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 0 0\n0 1 0\n0 0 1\n");
}

#[test]
fn eval_accepts_an_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let id = write_term(dir.path(), "id.frob", "id1\n");
    let algebra = dir.path().join("scaled.alg");
    std::fs::write(&algebra, "dim 1\nmult 1\nunit 1\ncounit 1/3\n").unwrap();
    let handle = write_term(dir.path(), "handle.frob", "comult ; mult\n");
    let out = run(&[
        "eval",
        handle.to_str().unwrap(),
        "--algebra",
        algebra.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
    drop(id);
}

#[test]
fn eval_rejects_invalid_algebra_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let id = write_term(dir.path(), "id.frob", "id1\n");
    let algebra = dir.path().join("bad.alg");
    std::fs::write(&algebra, "dim 1\nmult 1\nunit 1\ncounit 0\n").unwrap();
    let out = run(&[
        "eval",
        id.to_str().unwrap(),
        "--algebra",
        algebra.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degenerate pairing"));
}

#[test]
fn eval_enforces_the_arity_bound() {
    let dir = tempfile::tempdir().unwrap();
    let wide = write_term(dir.path(), "wide.frob", "id9\n");
    let out = run(&["eval", wide.to_str().unwrap(), "--algebra", "rationals"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "eval",
        wide.to_str().unwrap(),
        "--algebra",
        "rationals",
        "--max-arity",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dot_mult_cylinder_has_four_nodes_three_edges() {
    let dir = tempfile::tempdir().unwrap();
    let mult = write_term(dir.path(), "mult.frob", "mult\n");
    let out = run(&["dot", mult.to_str().unwrap(), "--cylinder"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("[shape=circle").count(), 4);
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_start().starts_with('v') && l.contains("--") && !l.contains("dashed"))
            .count(),
        3
    );
}

#[test]
fn dot_identity_and_handle_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let id = write_term(dir.path(), "id.frob", "id1\n");
    let out = run(&["dot", id.to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(text.matches("[shape=circle").count(), 1);

    let handle = write_term(dir.path(), "handle.frob", "comult ; mult\n");
    let out = run(&["dot", handle.to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(text.matches("[shape=circle").count(), 2);
    assert_eq!(text.matches("v0 -- v1;").count(), 2);
}

#[test]
fn check_axioms_patterns_and_determinism() {
    let homotopy = run(&["check-axioms", "--seed", "1"]);
    assert_eq!(homotopy.status.code(), Some(0));
    let text = stdout(&homotopy);
    assert_eq!(text.matches("PASS").count(), 7);
    assert!(text.contains("FAIL special"));

    let strict = run(&["check-axioms", "--strict", "--seed", "1"]);
    assert_eq!(strict.status.code(), Some(0));
    assert_eq!(stdout(&strict).matches("PASS").count(), 8);

    let again = run(&["check-axioms", "--seed", "1"]);
    assert_eq!(stdout(&homotopy), stdout(&again));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_term(dir.path(), "bad.frob", "mult ;\n @\n");
    let out = run(&["normalize", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2:2"), "missing position in: {err}");

    let illtyped = write_term(dir.path(), "illtyped.frob", "mult ; mult\n");
    let out = run(&["normalize", illtyped.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["normalize", dir.path().join("missing.frob").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let term = write_term(
        dir.path(),
        "t.frob",
        "(comult * id1) ; (id1 * mult) ; (comult * id1) # frobenius side, then split again\n",
    );
    let path = term.to_str().unwrap();
    for args in [
        vec!["normalize", path],
        vec!["dot", path],
        vec!["eval", path, "--algebra", "dual_numbers"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

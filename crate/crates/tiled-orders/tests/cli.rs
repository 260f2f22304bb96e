//! End-to-end checks of the installed binary: exit codes, byte-exact output,
//! and round-tripping between subcommands.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tiled-orders"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn validate_then_gorenstein_pipeline() {
    let matrix = r#"{"size":2,"d":[[0,2],[1,0]]}"#;
    let (code, out, _) = run(&["validate"], matrix);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"diagonal_ok\":true,\"triangle_violations\":[],\"is_n_graded\":true,\"is_basic\":true}\n"
    );
    let (code, out, _) = run(&["gorenstein"], matrix);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"nu\":[2,1],\"b\":[1,2],\"p\":[0,-1]}\n");
}

#[test]
fn exit_codes_follow_the_contract() {
    // input error
    let (code, _, err) = run(&["validate"], r#"{"size":2,"d":[[0,1],[1]]}"#);
    assert_eq!(code, 2);
    assert!(err.contains("not square"));
    // verification failure
    let (code, out, _) = run(
        &["gorenstein"],
        r#"{"size":3,"d":[[0,1,1],[1,0,1],[1,1,0]]}"#,
    );
    assert_eq!(code, 1);
    assert_eq!(out, "null\n");
    // success
    let (code, _, _) = run(&["cyclic", "--params", "1,1"], "");
    assert_eq!(code, 0);
}

#[test]
fn cover_output_feeds_vposet() {
    let (code, covered, _) = run(&["cover", "-m", "2"], r#"{"size":2,"d":[[0,1],[1,0]]}"#);
    assert_eq!(code, 0);
    let (code, poset, _) = run(&["vposet"], &covered);
    assert_eq!(code, 0);
    assert_eq!(poset, "{\"elements\":[\"(0,0,0,0)\"],\"relations\":[]}\n");
    let (code, report, _) = run(&["gldim"], &poset);
    assert_eq!(code, 0);
    assert_eq!(
        report,
        "{\"proj_dims\":{\"(0,0,0,0)\":0},\"global_dimension\":0}\n"
    );
}

#[test]
fn realize_round_trips_through_vposet() {
    let quiver = r#"{"vertices":["a","b","0"],"arrows":[["a","0"],["b","0"]]}"#;
    let (code, matrix, _) = run(&["realize"], quiver);
    assert_eq!(code, 0);
    assert_eq!(
        matrix,
        "{\"size\":4,\"d\":[[0,1,1,0],[1,0,0,1],[2,1,0,1],[1,2,1,0]]}\n"
    );
    let (code, dot, _) = run(&["vposet", "--dot"], &matrix);
    assert_eq!(code, 0);
    // three vertices, two arrows into the sink
    assert_eq!(dot.matches(';').count(), 5);
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn classify_exits_zero_on_verified_scan() {
    let (code, out, err) = run(
        &[
            "classify",
            "--size",
            "3",
            "--max-entry",
            "2",
            "--target",
            "empty",
        ],
        "",
    );
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.contains("\"unmatched\":[]"));
    assert!(err.contains("scan took"));
}

#[test]
fn stdout_is_byte_identical_across_runs() {
    let input = r#"{"size":3,"d":[[0,1,2],[2,0,1],[1,2,0]]}"#;
    let first = run(&["vposet", "--dot"], input);
    let second = run(&["vposet", "--dot"], input);
    assert_eq!(first.1, second.1);
    assert_eq!(first.0, 0);
}

#[test]
fn semigroup_preconditions_are_input_errors() {
    let (code, _, err) = run(&["semigroup", "--gens", "2,4", "-m", "3"], "");
    assert_eq!(code, 2);
    assert!(err.contains("gcd"));
    let (code, _, err) = run(&["semigroup", "--gens", "2,3", "-m", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("Frobenius"));
}

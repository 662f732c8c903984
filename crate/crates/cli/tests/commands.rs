use std::process::Command;

use homfly_cli::{run_command, OutputRecord};
use homfly_core::{homfly_double_twist, KnotParams};

fn run(args: &str) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("homfly")
        .chain(args.split_whitespace())
        .map(String::from)
        .collect();
    run_command(&argv)
}

#[test]
fn unknot_color_zero_text() {
    assert_eq!(
        run("compute --p -1 --s 1 --N 0 --format text"),
        (0, "1\n".into(), String::new())
    );
}

#[test]
fn trefoil_text_in_canonical_order() {
    let (code, out, _) = run("compute --p 1 --s 1 --N 1 --format text");
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "a^2*q^-2 + a^2*q^2 - a^4");
    assert_eq!(
        out.trim_end(),
        homfly_double_twist(KnotParams::new(1, 1, 1)).to_text()
    );
}

#[test]
fn json_is_one_parseable_line() {
    let (code, out, _) = run("compute --p 2 --s -1 --N 2");
    assert_eq!(code, 0);
    assert_eq!(out.matches('\n').count(), 1);
    let rec: OutputRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(
        rec.to_poly().unwrap(),
        homfly_double_twist(KnotParams::new(2, -1, 2))
    );
    assert_eq!(rec.meta.formula, "theorem-1.2");
}

#[test]
fn sun_specializes_the_generic_result() {
    let (_, out, _) = run("compute --p 1 --s 1 --N 1 --sun 2 --format text");
    assert_eq!(out.trim_end(), "q^2 + q^6 - q^8");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "compute --p 1 --badflag",
        "compute --p 1 --s 1",
        "compute --p 1 --s 1 --N -1",
        "compute --p 1 --s 1 --N 1 --sun 0",
        "compute --p 1 --s 1 --N 1 --format yaml",
        "verify --suite nope",
        "table --p-range 2..1 --s-range 1..2 --N-max 1 --out x",
        "frobnicate",
        "",
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args}");
        assert!(out.is_empty(), "{args}");
        assert!(err.contains("Usage"), "{args}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, err) = run("--help");
    assert_eq!(code, 0);
    assert!(out.contains("compute") && err.is_empty());
}

#[test]
fn expand_reports_coefficients_and_status() {
    let (code, out, _) = run("expand --p 1 --s 1 --sun 2 --kmax 3 --extra-N 2");
    assert_eq!(code, 0);
    assert!(out.contains("H_1 = -q^4\n"), "{out}");
    assert!(out.contains("checked N: 0,1,2,3,4,5\n"), "{out}");
    assert!(out.ends_with("status: Verified\n"), "{out}");
}

#[test]
fn verify_single_suite() {
    let (code, out, _) = run("verify --suite core --cases 50");
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.contains(" 0 failed"));
}

#[test]
fn table_is_sorted_ndjson() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.ndjson");
    let (code, out, _) = run(&format!(
        "table --p-range -1..1 --s-range -1..1 --N-max 2 --out {} --jobs 3",
        path.display()
    ));
    assert_eq!(code, 0);
    assert!(out.starts_with("wrote 27 records"));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(!body.contains('\r'));
    let keys: Vec<(i64, i64, u32)> = body
        .lines()
        .map(|l| {
            let r: OutputRecord = serde_json::from_str(l).unwrap();
            (r.knot.p, r.knot.s, r.color)
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(keys.len(), 27);
}

#[test]
fn unwritable_table_path_fails_cleanly() {
    let (code, _, err) =
        run("table --p-range 0..0 --s-range 0..0 --N-max 0 --out /nonexistent/dir/t");
    assert_ne!(code, 0);
    assert!(err.contains("cannot write"));
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_homfly"))
        .args([
            "compute", "--p", "1", "--s", "1", "--N", "1", "--format", "latex",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "a^{2}q^{-2} + a^{2}q^{2} - a^{4}\n"
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_homfly"))
        .args(["compute", "--p", "1", "--badflag"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("Usage"));
}

//! End-to-end checks of the binary: exit codes, wire formats, and
//! byte-stability across runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_newtonineq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("newtonineq-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn esf_prints_exact_rows() {
    let file = tmp_file("ex21.json", r#"{"pairs":[["0","1"],["0","1"]],"reals":[]}"#);
    let out = run(&["esf", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("e: 1 0 2 0 1"), "{text}");
    assert!(text.contains("P: 1 0 1 0 1"), "{text}");
}

#[test]
fn esf_rejects_negative_real_parts() {
    let file = tmp_file("bad.json", r#"{"pairs":[["-1","0"]],"reals":[]}"#);
    let out = run(&["esf", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn esf_decimal_view() {
    let file = tmp_file("half.json", r#"{"pairs":[["0","1/2"]],"reals":["1"]}"#);
    let out = run(&["esf", "--input", file.to_str().unwrap(), "--decimal", "3"]);
    assert!(stdout(&out).contains("e: 1.000 1.000 0.250 0.250"));
}

#[test]
fn check_is_deterministic_and_ordered() {
    let file = tmp_file(
        "mixed.json",
        r#"{"pairs":[["1","2"],["0","3"]],"reals":["2"]}"#,
    );
    let args = [
        "check",
        "--input",
        file.to_str().unwrap(),
        "--families",
        "i,ii,iii,iv",
        "--jobs",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,k,l,lhs,rhs,constant_num,constant_den,holds,margin"
    );
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(8) == Some("true")));
}

#[test]
fn check_newton_rows_do_not_bind_off_the_real_line() {
    let file = tmp_file("imag.json", r#"{"pairs":[["0","1"],["0","1"]],"reals":[]}"#);
    let out = run(&[
        "check",
        "--input",
        file.to_str().unwrap(),
        "--families",
        "newton",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("false"));
}

#[test]
fn check_lambda_family_needs_lambda() {
    let file = tmp_file("pair.json", r#"{"pairs":[["1","1"]],"reals":[]}"#);
    let out = run(&[
        "check",
        "--input",
        file.to_str().unwrap(),
        "--families",
        "lambda-newton",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "check",
        "--input",
        file.to_str().unwrap(),
        "--families",
        "lambda-newton",
        "--lambda",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // Equality instance: margin 0.
    assert!(stdout(&out).contains("lambda-newton,2,1,1,1,2,1,2,true,0"));
}

#[test]
fn positivity_pass_and_bound() {
    let out = run(&[
        "positivity",
        "--m",
        "1",
        "--s",
        "1",
        "--k",
        "1",
        "--l",
        "2",
        "--which",
        "f",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));
    // theta-gap base case dumps the seven-term expansion.
    let dump = std::env::temp_dir().join(format!("theta-dump-{}.txt", std::process::id()));
    let out = run(&[
        "positivity",
        "--m",
        "2",
        "--s",
        "0",
        "--k",
        "1",
        "--which",
        "theta-gap",
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dump).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("8 * a1^2 a2^2"));
    let _ = std::fs::remove_file(&dump);
    // Default bound rejects n = 12.
    let out = run(&[
        "positivity",
        "--m",
        "6",
        "--s",
        "0",
        "--k",
        "2",
        "--l",
        "2",
        "--which",
        "g",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // Raised bound accepts it.
    let out = bin()
        .env("NEWTONINEQ_MAX_N", "12")
        .args([
            "positivity",
            "--m",
            "6",
            "--s",
            "0",
            "--k",
            "2",
            "--l",
            "2",
            "--which",
            "g",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn lemma23_batch_passes() {
    let out = run(&["lemma23", "--random", "30", "--seed", "3", "--jobs", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains(r#""failures":0"#), "{text}");
}

#[test]
fn wedge_outputs_are_byte_stable() {
    let args = ["wedge", "--lambdas", "64/81,1", "--samples", "9"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("lambda,theta_radians,x,y\n"));
    assert!(stdout(&a).contains("64/81,0.475882249660"));

    let svg_a = std::env::temp_dir().join(format!("wedge-a-{}.svg", std::process::id()));
    let svg_b = std::env::temp_dir().join(format!("wedge-b-{}.svg", std::process::id()));
    for path in [&svg_a, &svg_b] {
        let out = run(&[
            "wedge",
            "--lambdas",
            "64/81",
            "--samples",
            "3",
            "--svg",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read(&svg_a).unwrap(),
        std::fs::read(&svg_b).unwrap()
    );
    let svg = std::fs::read_to_string(&svg_a).unwrap();
    assert!(svg.contains("Re(z)") && svg.contains("Im(z)"));
    let _ = std::fs::remove_file(&svg_a);
    let _ = std::fs::remove_file(&svg_b);
}

#[test]
fn search_is_reproducible() {
    let args = [
        "search", "--family", "iii", "--n", "7", "--k", "1", "--l", "1", "--budget", "4000",
        "--seed", "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert!(parsed["best_ratio"].as_f64().unwrap() >= 1.0);
}

#[test]
fn gen_emits_lists_with_provenance_header() {
    let out = run(&["gen", "--example", "imaginary-pairs", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"pairs":[["0","1"],["0","1"]],"reals":[]}"#
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("example: imaginary-pairs m=2"));
    let a = run(&["gen", "--example", "random", "--n", "7", "--seed", "3"]);
    let b = run(&["gen", "--example", "random", "--n", "7", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let out = run(&["gen", "--example", "odd-chain", "--m", "4", "--tau", "3"]);
    assert!(stdout(&out).contains(r#""tau":"3""#));
}

#[test]
fn search_rejects_bad_indices() {
    let out = run(&[
        "search", "--family", "v", "--n", "7", "--k", "1", "--l", "1", "--budget", "100", "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

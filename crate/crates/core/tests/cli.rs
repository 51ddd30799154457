//! Runs the built binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lucas-magic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn generate_then_recover() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("lucas", "4,1,3", Some("1,3")),
        ("lucas", "4,-3,1", None),
        ("frierson", "1,3;9,27", Some("1,3;9,27")),
        ("frierson", "27,1;3,9", Some("27,1;3,9")),
        ("frierson", "1,3;9,27;81,243", Some("1,3;9,27;81,243")),
    ];
    for (i, (family, params, frierson)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("{i}.txt"));
        let p = path.to_str().unwrap();
        let out = run(&["generate", "--family", family, "--params", params, "-o", p]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let rec = json(&run(&["verify", p, "--recover-params"]));
        match frierson {
            Some(f) => assert_eq!(rec["frierson"], *f, "{params}"),
            None => assert!(rec["frierson"].is_null(), "{params}"),
        }
        if *family == "lucas" {
            assert_eq!(rec["lucas"], *params);
        }
        let report = json(&run(&["verify", p, "--expect", "magic,regular,natural,fnc,family"]));
        assert_eq!(report["is_natural"], true);
    }
}

#[test]
fn counterexample_file() {
    let f = fixture("m5_counterexample.txt");
    let f = f.to_str().unwrap();
    let report = json(&run(&["verify", f]));
    assert_eq!(report["is_magic"], true);
    assert_eq!(report["fnc_pass"], true);
    assert_eq!(report["is_natural"], false);
    assert_eq!(report["summation_index"], 60);
    assert_eq!(report["frobenius_sq"], 4900);
    assert_eq!(run(&["verify", f, "--expect", "natural"]).status.code(), Some(1));
    assert_eq!(run(&["verify", f, "--expect", "magic,fnc"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["generate", "--params", "1,3;9,27"],
        &["generate", "--family", "frierson", "--params", "1,3", "--level", "2"],
        &["verify", "/nonexistent/square.txt"],
        &["enumerate", "--level", "3", "--norm-search"],
        &["power", "--params", "4,1,3", "-k", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--level", "2", "--family", "frierson", "--fundamental"][..],
        &["spectra", "--family", "frierson", "--params", "1,3;9,27"],
        &["enumerate", "--level", "2", "--sample", "5", "--seed", "7"],
        &["commute", "--suite", "fier9"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn census_table() {
    let out = run(&["tables", "--which", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| 2 | 9 | 360 | 48 | 12 | 5 | 3 |"), "{text}");
    assert!(text.contains("| 3 | 27 | 9828 | 5760 | 360 | 7 | 15 |"), "{text}");
}

#[test]
fn counts_above_ceiling_use_formulas() {
    let v = json(&run(&["enumerate", "--level", "4", "--fundamental", "--count-only"]));
    assert_eq!(v["materialized"], false);
    assert_eq!(v["formula_count"], 256 * 40320 / 8);
    assert_ne!(run(&["enumerate", "--level", "4", "--emit", "/tmp/never"]).status.code(), Some(0));
}

#[test]
fn emit_writes_every_square() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = run(&["enumerate", "--level", "1", "--emit", d, "--matrices"]);
    assert!(out.status.success());
    let params = std::fs::read_to_string(dir.path().join("parameters.txt")).unwrap();
    let lines: Vec<&str> = params.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"4,1,3"));
    let grid = dir.path().join("0001.txt");
    let report = json(&run(&["verify", grid.to_str().unwrap(), "--expect", "natural"]));
    assert_eq!(report["summation_index"], 12);
}

#[test]
fn commuting_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, params: &str| {
        let p = dir.path().join(name);
        let out = run(&["generate", "--params", params, "-o", p.to_str().unwrap()]);
        assert!(out.status.success());
        p
    };
    let a = write("a.txt", "4,1,3;36,9,27");
    let b = write("b.txt", "36,9,27;4,1,3");
    let c = write("c.txt", "4,3,1;36,9,27");
    let ab = json(&run(&["commute", a.to_str().unwrap(), b.to_str().unwrap()]));
    assert_eq!(ab["observed"], true);
    assert_eq!(ab["consistent"], true);
    let ac = json(&run(&["commute", a.to_str().unwrap(), c.to_str().unwrap()]));
    assert_eq!(ac["observed"], false);
    assert_eq!(ac["consistent"], true);
}

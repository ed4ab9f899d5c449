use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn blockscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockscope")).args(args).output().unwrap()
}

fn run_nocache(args: &[&str]) -> Output {
    let mut all = vec!["--no-cache"];
    all.extend_from_slice(args);
    blockscope(&all)
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn passing_check_exits_zero() {
    let o = run_nocache(&["--algebra", "kD8@p2", "verify:center"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["verdicts"][0]["status"], "pass");
    assert_eq!(r["algebra"]["name"], "kD8@p2");
}

#[test]
fn same_passes_on_both_s3_blocks() {
    let o = run_nocache(&["--algebra", "kS3@p2", "verify:same"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let v = r["verdicts"].as_array().unwrap();
    assert_eq!(v.len(), 2);
    assert!(v.iter().all(|v| v["status"] == "pass"));
}

#[test]
fn equiv_on_d8_matches_through_the_center() {
    let o = run_nocache(&["--algebra", "kD8@p2", "verify:equiv"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let xn = &r["verdicts"][0]["evidence"]["maps"][0];
    assert_eq!(xn["map"], "x+N");
    assert_eq!(xn["match"]["representative"], "1 + r^2");
}

#[test]
fn unsupported_combination_exits_three_with_reason() {
    let o = run_nocache(&["--algebra", "usl2@p3", "verify:equiv"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("group algebra"), "{}", stderr(&o));
}

#[test]
fn failing_verdict_exits_two() {
    // at cap 4 the annihilator window is too short for the restricted Lie algebra
    let o = run_nocache(&["--algebra", "usl2@p3", "--cap", "4", "verify:relative"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("fail: relative"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(blockscope(&["--algebra", "kZ2@p2"]).status.code(), Some(1));
    assert_eq!(run_nocache(&["--algebra", "kZ2@p2", "verify:nothing"]).status.code(), Some(1));
    assert_eq!(run_nocache(&["--algebra", "kZ2@p2", "--cap", "1", "info"]).status.code(), Some(1));
    let o = run_nocache(&["--algebra", "kZ2xZ3@p2", "blocks"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--field 4"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.alg");
    std::fs::write(&p, "p=2\nkind=group\norder=2\ntable:\n0 1\n1 7\n").unwrap();
    let o = run_nocache(&["--algebra", p.to_str().unwrap(), "info"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 6"), "{}", stderr(&o));
}

#[test]
fn description_files_and_field_override() {
    let s3 = root().join("algebras/s3-mod2.alg");
    let o = run_nocache(&["--algebra", s3.to_str().unwrap(), "blocks"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["sections"]["blocks"]["count"], 2);

    let o = run_nocache(&["--algebra", "kZ2xZ2@p2", "--field", "4", "info"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["algebra"]["field"]["e"], 2);
    assert_eq!(r["algebra"]["name"], "kZ2xZ2@p2 over F4");
    assert_eq!(run_nocache(&["--algebra", "kZ2xZ2@p2", "--field", "3", "info"]).status.code(), Some(1));
}

#[test]
fn golden_comparison() {
    let g = root().join("goldens/kZ2@p2.json");
    let o = run_nocache(&["--algebra", "kZ2@p2", "--golden", g.to_str().unwrap(), "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(&g).unwrap().replace("\"loewy_length\": 2", "\"loewy_length\": 3");
    std::fs::write(&bad, text).unwrap();
    let o = run_nocache(&["--algebra", "kZ2@p2", "--golden", bad.to_str().unwrap(), "all"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("$.sections.blocks.loewy_length"), "{}", stderr(&o));

    let missing = dir.path().join("missing.json");
    let o = run_nocache(&["--algebra", "kZ2@p2", "--golden", missing.to_str().unwrap(), "info"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reports_are_byte_stable_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let cached = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_blockscope"))
            .env("BLOCKSCOPE_CACHE", dir.path().join("cache"))
            .args(args)
            .output()
            .unwrap()
    };
    let args = ["--algebra", "kS3@p2", "--out", out.to_str().unwrap(), "verify:all"];
    assert_eq!(cached(&args).status.code(), Some(0));
    let first = std::fs::read(&out).unwrap();
    let entries: Vec<_> = walk(&dir.path().join("cache"));
    assert_eq!(entries.len(), 1, "{entries:?}");
    assert_eq!(cached(&args).status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), first);
    let fresh = run_nocache(&["--algebra", "kS3@p2", "verify:all"]);
    assert_eq!(fresh.stdout, first);
}

fn walk(p: &std::path::Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(p).unwrap() {
        let path = e.unwrap().path();
        if path.is_dir() {
            out.extend(walk(&path));
        } else {
            out.push(path);
        }
    }
    out
}

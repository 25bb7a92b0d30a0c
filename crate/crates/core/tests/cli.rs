//! The binary's exit codes and output formats.

use std::path::PathBuf;
use std::process::{Command, Output};

use projconf::enumeration::{classify, CaseLabel};
use projconf::incidence::{parse_inc, parse_real};

fn asset(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("assets")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projconf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("projconf-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, content).unwrap();
    p
}

#[test]
fn realize_exit_codes() {
    let ok = run(&["realize", asset("square7.inc").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(parse_real(&stdout(&ok)).unwrap().verify());

    let fano = run(&["realize", asset("fano.inc").to_str().unwrap()]);
    assert_eq!(fano.status.code(), Some(2));
    assert_eq!(stdout(&fano), "NOT_REAL Fano\n");

    let perles = run(&[
        "realize",
        asset("perles.inc").to_str().unwrap(),
        "--height",
        "4",
    ]);
    assert_eq!(perles.status.code(), Some(3));
    assert_eq!(stdout(&perles), "UNKNOWN height=4\n");

    let bad = temp_file("dup.inc", "points 4\nline 0 1 2\nline 0 1 3\n");
    let out = run(&["realize", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let missing = run(&["realize", "/nonexistent/file.inc"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn malformed_inputs_never_panic() {
    let cases = [
        "",
        "points",
        "points x",
        "points 3\nline 0 1 2 2",
        "line 0 1 2",
        "points 99999999",
        "points 3\nline 2 1 0",
    ];
    for (i, c) in cases.iter().enumerate() {
        let f = temp_file(&format!("bad{i}.inc"), c);
        for cmd in ["realize", "reduce"] {
            let out = run(&[cmd, f.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(1), "{cmd} on {c:?}");
        }
        let out = run(&["verify", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "verify on {c:?}");
    }
}

#[test]
fn enumerate_streams() {
    let seven = stdout(&run(&["enumerate", "--n", "7"]));
    let blocks: Vec<_> = seven
        .split("\n\n")
        .filter(|b| b.starts_with("points"))
        .map(|b| parse_inc(b).unwrap())
        .collect();
    let fano_like: Vec<_> = blocks.iter().filter(|s| s.lines().len() == 7).collect();
    assert_eq!(fano_like.len(), 1);
    assert!(blocks.iter().all(|s| classify(s) == Ok(CaseLabel::N7)));
    let eight = stdout(&run(&["enumerate", "--n", "8"]));
    assert!(eight.contains("N8_NoQuad_8T=1"));
    let three = run(&["enumerate", "--n", "3"]);
    assert_eq!(
        stdout(&three),
        "census n=3 cases: N8_NoQuad_8T=0 N8_NoQuad_7T=0 N8_NoQuad_le6T=0 N8_Quad=0 N7=0 N_le6=0\n"
    );
    assert_eq!(run(&["enumerate", "--n", "9"]).status.code(), Some(1));
    assert_eq!(eight, stdout(&run(&["enumerate", "--n", "8"])));
}

#[test]
fn other_subcommands() {
    let real = asset("perles.real");
    assert_eq!(stdout(&run(&["verify", real.to_str().unwrap()])), "VALID\n");
    let svg = run(&["render", real.to_str().unwrap(), "--labels"]);
    assert_eq!(svg.status.code(), Some(0));
    assert!(stdout(&svg).starts_with("<svg"));

    let e = run(&["elkies", "--a", "0", "--branch", "-"]);
    assert!(parse_real(&stdout(&e)).unwrap().verify());
    assert_eq!(run(&["elkies", "--a", "-1"]).status.code(), Some(1));

    let c = stdout(&run(&["curve-search", "--bound", "50"]));
    assert!(c.ends_with("points=4\n"));

    let g = stdout(&run(&["grid", "--n", "9", "--threshold", "3"]));
    assert_eq!(g, "grid n=9 threshold=3 lines=8 incidences=24 st_ok=true\n");

    let host = temp_file(
        "host.real",
        &stdout(&run(&["realize", asset("square8.inc").to_str().unwrap()])),
    );
    let triple = temp_file("triple.inc", "points 3\nline 0 1 2\n");
    let found = stdout(&run(&[
        "find",
        host.to_str().unwrap(),
        triple.to_str().unwrap(),
    ]));
    assert!(found.starts_with("embedding 0->"), "{found}");
    let none = stdout(&run(&[
        "find",
        host.to_str().unwrap(),
        asset("fano.inc").to_str().unwrap(),
    ]));
    assert_eq!(none, "none\n");

    let reduced = stdout(&run(&["reduce", asset("square8.inc").to_str().unwrap()]));
    assert_eq!(parse_inc(&reduced).unwrap().n(), 8);
}

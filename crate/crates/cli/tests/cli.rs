use std::io::Write;
use std::process::{Command, Output, Stdio};

use freebraid::scenario::BRUNNIAN;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freebraid")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freebraid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn brunnian_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "{BRUNNIAN}").unwrap();
    f
}

#[test]
fn perm_of_one_crossing() {
    let o = run(&["perm", "n=2; z1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1->2 2->1\n");
}

#[test]
fn bracket_echoes_brunnian() {
    let f = brunnian_file();
    let arg = format!("@{}", f.path().display());
    let o = run(&["bracket", "--parity", "gaussian", &arg]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), BRUNNIAN);
}

#[test]
fn non_cyclic_gaussian_is_a_precondition_failure() {
    let o = run(&["parity", "--parity", "gaussian", "n=3; z1 z1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("closure has 3 components; Gaussian parity requires a cyclic permutation"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["parse", "n=2; z2"]).status.code(), Some(1));
    assert_eq!(run(&["parse", "n=2; q1"]).status.code(), Some(1));
    assert_eq!(run(&["parity", "--parity", "nonsense", "n=2; z1"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["parse", "@/nonexistent/word.txt"]).status.code(), Some(1));
}

#[test]
fn inline_file_and_stdin_agree() {
    let f = brunnian_file();
    let arg = format!("@{}", f.path().display());
    for cmd in ["perm", "closure", "chords", "canon", "reduce"] {
        let inline = stdout(&run(&[cmd, BRUNNIAN]));
        assert_eq!(inline, stdout(&run(&[cmd, &arg])), "{cmd}");
        assert_eq!(inline, stdout(&run_stdin(&[cmd], BRUNNIAN)), "{cmd}");
        assert_eq!(inline, stdout(&run_stdin(&[cmd, "-"], BRUNNIAN)), "{cmd}");
    }
}

#[test]
fn json_input_and_output() {
    let o = run(&["parse", "--json", "n=3; z1 t2"]);
    let json = stdout(&o);
    assert_eq!(json.trim_end(), r#"{"n":3,"letters":[{"kind":"classical","i":1},{"kind":"virtual","i":2}]}"#);
    assert_eq!(stdout(&run(&["parse", json.trim_end()])), "n=3; z1 t2\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["perm", "--json", "n=2; z1"]))).unwrap();
    assert_eq!(v["images"], serde_json::json!([2, 1]));
}

#[test]
fn equality_commands() {
    assert_eq!(stdout(&run(&["eq-f", "n=2; z1 z1", "n=2;"])), "equal\n");
    assert_eq!(stdout(&run(&["eq-strong", "n=2; z1 z1", "n=2;"])), "not equal\n");
    assert_eq!(stdout(&run(&["eq-f", "n=3; z1 z2 z1", "n=3; z2 z1 z2"])), "not equal\n");
    assert_eq!(run(&["eq-f", "n=3; z1", "n=2; z1"]).status.code(), Some(2));
}

#[test]
fn distinguish_verdicts() {
    let o = stdout(&run(&["distinguish", "--parity", "component:N1=1", "n=3; z1 z2 z1", "n=3; z2 z1 z2"]));
    assert!(o.ends_with("inconclusive\n"), "{o}");
    // brackets z2 versus nothing under N1 = {1, 2}
    let o = stdout(&run(&["distinguish", "--parity", "component:N1=1,2", "n=3; z2 z2 z2", "n=3; t2"]));
    assert!(o.ends_with("not equivalent (certified by parity bracket)\n"), "{o}");
}

#[test]
fn scramble_is_seeded() {
    let a = stdout(&run(&["scramble", "--steps", "50", "--seed", "7", "--history", BRUNNIAN]));
    let b = stdout(&run(&["scramble", "--steps", "50", "--seed", "7", "--history", BRUNNIAN]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 51);
}

#[test]
fn oracle_finds_classical_r3() {
    let o = run(&["oracle", "--moveset", "fb", "--bound", "5", "n=3; z1 z2 z1", "n=3; z2 z1 z2"]);
    assert_eq!(stdout(&o), "equal\n");
    let o = run(&["oracle", "--moveset", "f", "--bound", "5", "n=3; z1 z2 z1", "n=3; z2 z1 z2"]);
    assert_eq!(stdout(&o), "not found within bound\n");
}

#[test]
fn renders_match_golden_files() {
    let ascii = stdout(&run(&["render", "--format", "ascii", BRUNNIAN]));
    assert_eq!(ascii, include_str!("golden/brunnian.txt"));
    let svg = stdout(&run(&["render", "--format", "svg", BRUNNIAN]));
    assert_eq!(svg, include_str!("golden/brunnian.svg"));
}

#[test]
fn scenarios() {
    let o = stdout(&run(&["scenario", "brunnian"]));
    assert!(o.contains("[pass] crossings odd: 8/8"), "{o}");
    assert!(o.contains("[pass] bigons: 0"), "{o}");
    assert!(o.contains("[pass] bracket equals input: yes"), "{o}");
    assert!(!o.contains("FAIL"), "{o}");

    let o = stdout(&run(&["scenario", "beta-prime", "--reference"]));
    assert!(o.contains("[pass] bracket closure components: 3"), "{o}");
    assert!(!o.contains("FAIL"), "{o}");

    let o = run(&["scenario", "beta-prime", BRUNNIAN]);
    assert_eq!(o.status.code(), Some(2));
}

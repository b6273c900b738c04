use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn dmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_passes_on_d4() {
    let o = dmw(&["verify", &data("d4_principal.json")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("CHECK")).all(|l| l.contains(" PASS ")));
}

#[test]
fn verify_fails_when_a_brauer_degree_is_negative() {
    let o = dmw(&["verify", &data("d7_block2.json"), "--assign", "a=1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("CHECK brauer_degrees FAIL"), "{}", stdout(&o));
    let o = dmw(&["verify", &data("d7_block2.json"), "--assign", "a=2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_reports_input_errors() {
    assert_eq!(code(&dmw(&["verify", "missing.json"])), 2);
    let bad = write_temp("broken.json", "{\"group\": ");
    assert_eq!(code(&dmw(&["verify", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&dmw(&["verify", &data("d4_principal.json"), "--q", "1"])), 2);
    assert_eq!(code(&dmw(&["verify", &data("d4_principal.json"), "--assign", "zz=1"])), 2);
}

#[test]
fn verify_accepts_q_samples() {
    let o = dmw(&["verify", &data("d4_principal.json"), "--q", "2,3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("at q=2,3"), "{}", stdout(&o));
}

#[test]
fn solve_f4() {
    let o = dmw(&["solve", &data("f4_principal.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in ["eq: c2 = c1-1", "eq: c4 = c1+2*c3-2", "eq: e = 2", "dom: c3 in {0,1}"] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
}

#[test]
fn solve_twisted_e6() {
    let o = dmw(&["solve", &data("2e6_principal.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in ["eq: c9 = 4+2*c1+3*c4-3*c5+c6-2*c7+2*c8", "eq: d4 = -3-2*d2+2*d3"] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
}

const TOY: &str = r#"{"group":"C2","order":"q^4 P1^2 P2^2 P4","block":"b","ell_condition":"",
  "characters":[{"name":"2.","degree":"1","series":"ps"},{"name":"1.1","degree":"1/2 q P2^2","series":"ps"}],
  "columns":[{"series":"ps","entries":[1,1]},{"series":"ps","entries":[0,1]}],
  "params":{"a":{"min":0,"max":0}},
  "constraints":[{"kind":"nonneg","exprs":["-a"],"source":"toy"}]}"#;

#[test]
fn solve_single_point() {
    let p = write_temp("toy.json", TOY);
    let o = dmw(&["solve", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("survivors: 1\n"), "{out}");
    assert!(out.contains("point: a=0\n"), "{out}");
}

#[test]
fn solve_reports_inconsistency() {
    let p = write_temp("toy_bad.json", &TOY.replace(r#"["-a"]"#, r#"["-a-1"]"#));
    let o = dmw(&["solve", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("survivors: 0"), "{}", stdout(&o));
    assert!(stdout(&o).contains("[toy]"), "{}", stdout(&o));
}

#[test]
fn solve_is_byte_stable() {
    let a = stdout(&dmw(&["solve", &data("d7_principal.json"), "--scenario", "conjectural"]));
    let b = stdout(&dmw(&["solve", &data("d7_principal.json"), "--scenario", "conjectural"]));
    assert_eq!(a, b);
    assert!(a.contains("dom: b9 in {0,1,2,3,4,5,6}\n"), "{a}");
}

#[test]
fn solve_accepts_domain_overrides() {
    let o = dmw(&["solve", &data("d4_principal.json"), "--domain", "a=0..1"]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}

#[test]
fn degree_of_a_d4_character() {
    let o = dmw(&["degree", "--group", "D4", "--label", ".31"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "q^2 P3 P6\n");
    assert_eq!(code(&dmw(&["degree", "--group", "D4", "--label", "9.9"])), 2);
    assert_eq!(code(&dmw(&["degree", "--group", "X4", "--label", ".4"])), 2);
}

#[test]
fn branching_both_ways() {
    let o = dmw(&["branch", "--from", "D3", "--to", "D4", "--label", ".3"]);
    assert_eq!(code(&o), 0);
    let mut lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    lines.sort();
    assert_eq!(lines, vec!["1 .31", "1 .4", "1 1.3"]);
    let o = dmw(&["branch", "--from", "D4", "--to", "D3", "--label", "1.21", "--direction", "restrict"]);
    let mut lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    lines.sort();
    assert_eq!(lines, vec!["1 .21", "1 1.1^2", "1 1.2"]);
    assert_eq!(code(&dmw(&["branch", "--from", "D4", "--to", "D6", "--label", ".4"])), 2);
    assert_eq!(code(&dmw(&["branch", "--from", "D4", "--to", "D3", "--label", ".4", "--direction", "induce"])), 2);
}

#[test]
fn census_of_d5() {
    let o = dmw(&["census", &data("d5_principal.json")]);
    assert_eq!(stdout(&o), "ps:7 A3:1 D3:2 D4:2 .1^4:2\n");
}

#[test]
fn equiv_finds_witnesses_and_controls() {
    let o = dmw(&["equiv", &data("e7_block2.json"), &data("e7_block3.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("witness: "), "{}", stdout(&o));
    let o = dmw(&["equiv", &data("d6_block1.json"), &data("d6_block3.json")]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NONE\n");
}

#[test]
fn data_directory_can_be_overridden() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("alt_data");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("toy.json"), TOY).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dmw"))
        .args(["census", "toy"])
        .env("DMW_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "ps:2\n");
}

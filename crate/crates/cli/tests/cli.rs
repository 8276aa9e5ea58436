use std::path::PathBuf;
use std::process::{Command, Output};

fn agtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agtilt"))
        .args(args)
        .env_remove("AGTILT_CORPUS_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("agtilt-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn check_main_on_auslander_algebra_of_dual_numbers() {
    let o = agtilt(&["check", "main", "auslander-x2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("main: true"), "{s}");
    assert!(s.contains("tilted false, add L = Cogen T_C false"), "{s}");
}

#[test]
fn negative_verdict_is_not_a_failure() {
    let o = agtilt(&["check", "1ag", "a2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1ag: false"));
    let o = agtilt(&["check", "tilted", "a3", "--format", "json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["value"], true);
    assert_eq!(rec["status"], "pass");
}

#[test]
fn suite_on_cyclic_nakayama_passes() {
    let o = agtilt(&["suite", "nakayama-cyclic-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn info_and_ind_report_invariants() {
    let o = agtilt(&["info", "auslander-x2", "--format", "json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["dim"], 5);
    assert_eq!(rec["gldim"], "2");
    assert_eq!(rec["domdim"], "2");
    let o = agtilt(&["ind", "truncated-x3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = agtilt(&["info", "truncated-x2"]);
    assert!(stdout(&o).contains("gl.dim        inf"));
}

#[test]
fn dot_export_to_file() {
    let path = scratch("dot").join("a3.dot");
    let o = agtilt(&["dot", "a3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("style=dashed").count(), 3);
}

#[test]
fn input_errors_exit_with_three() {
    assert_eq!(agtilt(&["info", "no-such-algebra"]).status.code(), Some(3));
    let path = scratch("bad").join("bad.alg");
    std::fs::write(&path, "vertices: 2\narrow: a: 1 -> 2\nrelation: a.q = 0\n").unwrap();
    let o = agtilt(&["info", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column 13"), "{err}");
    let path = scratch("loop").join("loop.alg");
    std::fs::write(&path, "vertices: 1\narrow: x: 1 -> 1\n").unwrap();
    assert_eq!(agtilt(&["info", path.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(agtilt(&["check", "sometimes", "a2"]).status.code(), Some(3));
}

#[test]
fn capped_catalog_is_inconclusive() {
    let o = agtilt(&["check", "tilted", "auslander-x3", "--catalog-cap", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn wrong_declared_value_fails_the_suite() {
    let dir = scratch("wrong");
    let text = "name: wrong\nvertices: 2\narrow: a: 1 -> 2\nexpect.domdim: 2\n";
    std::fs::write(dir.join("wrong.alg"), text).unwrap();
    let o = agtilt(&["corpus", "--dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("domdim expected 2 got 1"));
}

#[test]
fn corpus_directory_from_environment() {
    let dir = scratch("env");
    std::fs::write(dir.join("one.alg"), "vertices: 1\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_agtilt"))
        .args(["corpus", "--format", "json"])
        .env("AGTILT_CORPUS_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 2);
    assert!(s.contains("\"source\":\"one\""));
}

#[test]
fn prime_and_seed_overrides_keep_verdicts() {
    let a = agtilt(&["suite", "commutative-square", "--format", "json"]);
    let b = agtilt(&["suite", "commutative-square", "--format", "json", "--prime", "7", "--seed", "3"]);
    let first = |o: &Output| -> serde_json::Value { serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap() };
    let (va, vb) = (first(&a), first(&b));
    assert_eq!(vb["prime"], 7);
    for key in ["is_1ag", "is_auslander", "is_tilted", "catalog_size", "gldim", "domdim"] {
        assert_eq!(va[key], vb[key], "{key}");
    }
}

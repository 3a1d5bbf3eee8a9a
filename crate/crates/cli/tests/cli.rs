use std::path::PathBuf;
use std::process::{Command, Output};

use turnreach_cli::report::Report;

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_turnreach"));
    cmd.args(args).env_remove("TURNREACH_TIME_BUDGET_MS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn analyze_text() {
    let o = run(&["analyze", "LRLR"], &[]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("prefix numbers: 0 1 0 1 0"));
    assert!(text.contains("staircase; A = Q+((3,2))"));
    let o = run(&["analyze", "RR", "--oracle"], &[]);
    assert!(stdout(&o).contains("-y: bounds [1, 1], constructed 1, exact 1"));
}

#[test]
fn analyze_json_deltas() {
    let o = run(&["analyze", "LLRRR", "--json"], &[]);
    assert_eq!(code(&o), 0);
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.deltas, vec![0, 1, 2, 1, 0, -1]);
    assert_eq!(r.excess, -1);
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [&["analyze", "LLRRR", "--json", "--oracle"][..], &["analyze", "LRLR", "--json"], &["analyze", "", "--json"]] {
        let first = stdout(&run(args, &[]));
        assert_eq!(first, stdout(&run(args, &[])), "{args:?}: not deterministic");
        let r: Report = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", first, "{args:?}");
    }
}

#[test]
fn bounds_table() {
    let o = run(&["bounds", "LLLLLL"], &[]);
    assert_eq!(code(&o), 0);
    let row = stdout(&o).lines().find(|l| l.starts_with("-x")).unwrap().to_string();
    let nums: Vec<&str> = row.split_whitespace().collect();
    assert_eq!((nums[2], nums[4]), ("2", "2"));
    let o = run(&["bounds", ""], &[]);
    assert!(stdout(&o).starts_with("no turns: A = {(a,0) | a >= 1}"));
}

#[test]
fn svg_goldens() {
    let dir = std::env::temp_dir().join(format!("turnreach-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (seq, algo, name) in [("LRLR", "box", "lrlr_box.svg"), ("RR", "witness:-y", "rr_witness.svg"), ("LLLLL", "closest:-x", "lllll_closest.svg")] {
        let out = dir.join(name);
        let o = run(&["draw", seq, "--algo", algo, "--svg", out.to_str().unwrap()], &[]);
        assert_eq!(code(&o), 0, "{seq}");
        let got = std::fs::read_to_string(&out).unwrap();
        let want = std::fs::read_to_string(golden(name)).unwrap();
        assert_eq!(got, want, "{name}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn draw_text_and_failures() {
    let o = run(&["draw", "LLLLL", "--algo", "closest:-x"], &[]);
    assert!(stdout(&o).contains("end (-1, 0)"));
    let o = run(&["draw", "LRLR", "--algo", "witness:+x"], &[]);
    assert_eq!(code(&o), 1);
    let o = run(&["draw", "LRLR", "--algo", "nope"], &[]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors() {
    let o = run(&["analyze", "LXR"], &[]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid character at position 2"));
    assert_eq!(code(&run(&["frobnicate"], &[])), 2);
    assert_eq!(code(&run(&["verify", "--filter", "delta~3"], &[])), 2);
}

#[test]
fn verify_sweeps() {
    let o = run(&["verify", "--max-n", "5", "--lmax", "6"], &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("63 sequences, all checks pass"));
    let o = run(&["verify", "--max-n", "7", "--filter", "delta>=5", "--jobs", "2"], &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("10 sequences, all checks pass"));
}

#[test]
fn time_budget_exit_code() {
    let budget = [("TURNREACH_TIME_BUDGET_MS", "1")];
    assert_eq!(code(&run(&["verify", "--max-n", "8"], &budget)), 3);
    assert_eq!(code(&run(&["analyze", "LLLLLLLLLL", "--oracle"], &budget)), 3);
}

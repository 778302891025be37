use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diadem")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json() {
    let o = run(&["analyze", "--g6", "Bw", "--output", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["graph_id"], "Bw");
    assert_eq!(v["alpha"], 1);
    assert_eq!(v["mu"], 1);
    assert_eq!(v["ke"], false);
}

#[test]
fn analyze_fixture_text() {
    let o = run(&["analyze", "--fixture", "fig3", "--output", "text"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("alpha"));
    assert!(out.contains("EXCW"));
}

#[test]
fn fixture_list_and_emit() {
    let o = run(&["fixture", "--list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("fig2")));
    let o = run(&["fixture", "--name", "fig3", "--emit", "graph6"]);
    assert_eq!(stdout(&o).trim(), "EXCW");
    let o = run(&["fixture", "--name", "fig3", "--emit", "dot"]);
    assert!(stdout(&o).contains("--"));
}

#[test]
fn suite_passes_on_small_graphs() {
    let o = run(&["suite", "--n", "0-4", "--output", "json"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(v["summary"], "suite");
    assert_eq!(v["failures"], 0);
    assert_eq!(v["graphs"], 1 + 1 + 2 + 8 + 64);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["suite", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--g6", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--n", "8"]).status.code(), Some(2));
}

#[test]
fn hunt_is_deterministic() {
    let args = ["hunt", "--conjecture", "ker-diadem", "--random", "10,0.3,300,5", "--output", "json"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let last: serde_json::Value = serde_json::from_str(stdout(&a).lines().last().unwrap()).unwrap();
    assert_eq!(last["graphs"], 300);
}

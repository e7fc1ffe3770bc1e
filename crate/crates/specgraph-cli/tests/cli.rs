//! End-to-end checks of the command-line contract: exit codes, artifact
//! determinism and the documented subcommands.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn zero_divisor_30_quotient_checks_clean() {
    let out = run(&[
        "spectrum",
        "--zero-divisor",
        "30",
        "--matrix",
        "dsq",
        "--via",
        "quotient",
        "--check",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("x^6 - 263*x^5 + 27575*x^4"));
    assert!(text.contains("\"exact\": \"46\""));
}

#[test]
fn star_dalpha_spectrum_runs() {
    let out = run(&[
        "spectrum", "--family", "star", "--n", "10", "--matrix", "dalpha", "--alpha", "0.5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"kind\":\"dalpha\""));
}

#[test]
fn disconnected_distance_input_exits_2() {
    // two triangles: fine for nl, an input error for dsq
    let dir = std::env::temp_dir().join("specgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("disconnected.g6");
    // 2 disjoint triangles on 6 vertices
    let mut g = specgraph::graph::Graph::empty(6).unwrap();
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        g.add_edge(u, v).unwrap();
    }
    std::fs::write(&path, format!("{}\n", specgraph::graph::encode_graph6(&g))).unwrap();
    let nl = run(&[
        "spectrum",
        "--graph6-file",
        path.to_str().unwrap(),
        "--matrix",
        "nl",
    ]);
    assert!(nl.status.success());
    let dsq = run(&[
        "spectrum",
        "--graph6-file",
        path.to_str().unwrap(),
        "--matrix",
        "dsq",
    ]);
    assert_eq!(dsq.status.code(), Some(2));
}

#[test]
fn malformed_graph6_exits_2() {
    let dir = std::env::temp_dir().join("specgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("malformed.g6");
    std::fs::write(&path, "D?\n").unwrap();
    let out = run(&[
        "spectrum",
        "--graph6-file",
        path.to_str().unwrap(),
        "--matrix",
        "l",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6 parse error"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&[
        "spectrum", "--family", "star", "--n", "5", "--matrix", "nonsense",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "spectrum", "--family", "star", "--n", "5", "--matrix", "dalpha",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "unknown-predicate", "--all-connected", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["ranges", "thm4", "--omega", "5", "--t", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv_is_deterministic() {
    let args = ["verify", "brouwer", "--all-connected", "5"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout, "CSV must be byte-identical across runs");
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.starts_with("instance_id,predicate,pass,worst_k,margin\n"));
    let summary = String::from_utf8_lossy(&a.stderr);
    assert!(summary.contains("failed 0"), "{summary}");
}

#[test]
fn verify_le_trees_runs() {
    let out = run(&["verify", "le-trees", "--n-max", "9"]);
    assert!(out.status.success());
    // trees of orders 2..=9: 1+1+2+3+6+11+23+47 = 94 rows
    let rows = String::from_utf8_lossy(&out.stdout).lines().count();
    assert_eq!(rows, 95);
}

#[test]
fn verify_dalpha_bounds_from_graph6_file() {
    let dir = std::env::temp_dir().join("specgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycles.g6");
    let mut corpus = String::new();
    for n in [4usize, 5, 6] {
        let g = specgraph::graph::build_named(&specgraph::graph::FamilySpec::Cycle { n }).unwrap();
        corpus.push_str(&format!("{}\n", specgraph::graph::encode_graph6(&g)));
    }
    std::fs::write(&path, corpus).unwrap();
    let out = run(&[
        "verify",
        "dalpha-bounds",
        "--graph6-file",
        path.to_str().unwrap(),
        "--alpha",
        "0.5",
    ]);
    assert!(out.status.success());
    let rows = String::from_utf8_lossy(&out.stdout).lines().count();
    assert_eq!(rows, 4, "header plus one row per graph");
}

#[test]
fn ranges_match_documented_examples() {
    let out = run(&["ranges", "thm3.1", "--omega", "6", "--r", "1", "--c", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[1,2] u [7,n]"));

    let out = run(&["ranges", "thm3.10", "--s", "9", "--r", "2", "--c", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("all k"));

    let out = run(&["ranges", "thm4", "--omega", "5", "--t", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("[1,3] u [6,n]"), "{text}");
}

#[test]
fn ranges_cross_check_families() {
    let out = run(&[
        "ranges",
        "thm4",
        "--omega",
        "4",
        "--t",
        "4",
        "--cross-check",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.matches("pass=true").count() >= 3, "{text}");

    let out = run(&[
        "ranges",
        "thm3.1",
        "--omega",
        "3",
        "--r",
        "3",
        "--c",
        "1",
        "--cross-check",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass=true"));
}

#[test]
fn power_graph_quotient_nl() {
    let out = run(&[
        "spectrum", "--power", "12", "--matrix", "nl", "--via", "quotient", "--check",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn csv_format_spectrum() {
    let out = run(&[
        "spectrum", "--family", "cycle", "--n", "4", "--matrix", "l", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.starts_with("graph,value,multiplicity\n"));
    assert!(text.contains(",4,1") && text.contains(",2,2"));
    // last row is the (numerically tiny) zero eigenvalue
    let last = text.lines().last().unwrap();
    let value: f64 = last.split(',').nth(1).unwrap().parse().unwrap();
    assert!(value.abs() < 1e-9);
}

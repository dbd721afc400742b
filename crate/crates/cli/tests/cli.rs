//! End-to-end checks of the `bigraph` binary: flag validation, exit codes,
//! file outputs and rerun reproducibility.

use std::path::Path;
use std::process::{Command, Output};

fn bigraph(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigraph"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn assert_success(out: &Output) {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn datasets_exports_the_karate_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(&["datasets", "--karate", "--output", "karate.txt"], dir.path());
    assert_success(&out);
    let text = std::fs::read_to_string(dir.path().join("karate.txt")).unwrap();
    assert_eq!(text.lines().count(), 78);
}

#[test]
fn generate_writes_incidence_and_reproduces_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "generate", "--karate", "--model", "teams", "--p", "0.8", "--groups", "50",
        "--seed", "7", "--output", "a.csv",
    ];
    let out = bigraph(&args, dir.path());
    assert_success(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("34 agents x 50 groups"), "stdout: {stdout}");

    let mut again = args;
    again[11] = "b.csv";
    assert_success(&bigraph(&again, dir.path()));
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b, "same seed must give identical bytes");

    let parsed = bigraph::read_incidence(&String::from_utf8(a).unwrap()).unwrap();
    assert_eq!(parsed.agent_count(), 34);
    assert_eq!(parsed.group_count(), 50);
}

#[test]
fn generate_supports_ws_substrates() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &[
            "generate", "--ws", "50,6,0.1", "--model", "clubs", "--p", "0.95",
            "--groups", "50", "--seed", "1", "--output", "ws.csv",
        ],
        dir.path(),
    );
    assert_success(&out);
    let parsed =
        bigraph::read_incidence(&std::fs::read_to_string(dir.path().join("ws.csv")).unwrap())
            .unwrap();
    assert_eq!(parsed.agent_count(), 50);
    assert_eq!(parsed.group_count(), 50);
}

#[test]
fn generate_without_input_source_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &["generate", "--model", "teams", "--p", "0.5", "--groups", "5", "--output", "x.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.to_lowercase().contains("usage"), "stderr: {stderr}");
}

#[test]
fn generate_with_two_sources_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &[
            "generate", "--karate", "--ws", "10,2,0.0", "--model", "teams", "--p", "0.5",
            "--groups", "5", "--output", "x.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_prints_entropy_seed_when_omitted() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &["generate", "--karate", "--model", "clubs", "--p", "0.9", "--groups", "5",
          "--output", "e.csv"],
        dir.path(),
    );
    assert_success(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("seed:"), "stdout: {stdout}");
}

#[test]
fn generate_can_export_embedding_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &["generate", "--karate", "--model", "organizations", "--p", "0.8", "--groups", "10",
          "--seed", "2", "--output", "o.csv", "--blau-csv", "blau.csv"],
        dir.path(),
    );
    assert_success(&out);
    let blau = std::fs::read_to_string(dir.path().join("blau.csv")).unwrap();
    assert_eq!(blau.lines().count(), 35);
    assert!(blau.starts_with("agent,x1,x2\n"));

    // rejected for models without an embedding
    let out = bigraph(
        &["generate", "--karate", "--model", "teams", "--p", "0.8", "--groups", "10",
          "--seed", "2", "--output", "t.csv", "--blau-csv", "b2.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stats_reports_skewness_and_ratio() {
    let dir = tempfile::tempdir().unwrap();
    assert_success(&bigraph(
        &["generate", "--karate", "--model", "clubs", "--p", "0.8", "--groups", "60",
          "--seed", "3", "--output", "g.csv"],
        dir.path(),
    ));
    let out = bigraph(
        &["stats", "--incidence", "g.csv", "--null-replicates", "10", "--seed", "1"],
        dir.path(),
    );
    assert_success(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("agent degree skewness:"));
    assert!(stdout.contains("four-cycle ratio:"));
}

#[test]
fn stats_on_empty_incidence_fails_with_skewness_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("empty.csv"),
        "agent,g0,g1\na,0,0\nb,0,0\nc,0,0\n",
    )
    .unwrap();
    let out = bigraph(
        &["stats", "--incidence", "empty.csv", "--seed", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("skewness undefined"), "stderr: {stderr}");
}

#[test]
fn stats_on_missing_file_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(&["stats", "--incidence", "nope.csv", "--seed", "1"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn backbone_writes_an_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    assert_success(&bigraph(
        &["generate", "--karate", "--model", "teams", "--p", "0.8", "--groups", "200",
          "--seed", "5", "--output", "g.csv"],
        dir.path(),
    ));
    let out = bigraph(
        &["backbone", "--incidence", "g.csv", "--alpha", "0.05", "--replicates", "30",
          "--seed", "2", "--output", "bb.txt"],
        dir.path(),
    );
    assert_success(&out);
    let text = std::fs::read_to_string(dir.path().join("bb.txt")).unwrap();
    let net = bigraph::load_edge_list(&text).unwrap();
    assert!(net.edge_count() > 0);
}

#[test]
fn experiment_recovery_emits_one_row_per_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = bigraph(
        &["experiment-recovery", "--seed", "11", "--output-dir", "out", "--groups", "40",
          "--replicates", "20"],
        dir.path(),
    );
    assert_success(&out);
    let csv = std::fs::read_to_string(dir.path().join("out/recovery.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("model,simple_matching,correlation,jaccard,isolates\n"));
}

#[test]
fn experiment_characteristics_writes_rows_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    // replicates trimmed for speed; groups stay at 50 because tiny group
    // counts can produce zero-variance degree sequences, which are an error
    let out = bigraph(
        &["experiment-characteristics", "--seed", "4", "--output-dir", "out",
          "--replicates", "1", "--null-replicates", "3"],
        dir.path(),
    );
    assert_success(&out);
    let rows = std::fs::read_to_string(dir.path().join("out/characteristics.csv")).unwrap();
    // header + 3 models x 13 p values x 1 replicate
    assert_eq!(rows.lines().count(), 1 + 39);
    assert!(std::fs::metadata(dir.path().join("out/characteristics_summary.csv")).is_ok());
}

#[test]
fn thread_cap_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bigraph"))
        .args(["experiment-recovery", "--seed", "9", "--output-dir", "out", "--groups", "30",
               "--replicates", "20"])
        .env("BIGRAPH_THREADS", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_success(&out);
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_netresil");

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn fixture(name: &str, body: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    (dir, path.to_str().unwrap().to_owned())
}

const TWO_TRIANGLES: &str = "# two triangles and a bridge\na b\nb c\na c\nc d\nd e\ne f\nd f\n";

#[test]
fn generate_ba_line_count() {
    let out = run(
        &["generate", "--model", "ba", "--n", "100", "--m", "2", "--seed", "1"],
        None,
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 196);
}

#[test]
fn generate_er_formats() {
    let out = run(
        &[
            "generate", "--model", "er", "--n", "10", "--p", "0.3", "--seed", "1", "--format", "csv",
        ],
        None,
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("source,target"));
    assert_eq!(text.lines().nth(1), Some("0,9"));
    assert_eq!(text.lines().count(), 11);

    let out = run(
        &[
            "generate", "--model", "er", "--n", "3", "--p", "1", "--seed", "1", "--format", "json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["m"], 3);
}

#[test]
fn attack_writes_csv_table_to_file() {
    let (dir, path) = fixture("net.txt", TWO_TRIANGLES);
    let dest = dir.path().join("report.csv");
    let out = run(
        &[
            "attack",
            &path,
            "--fraction",
            "0.2",
            "--seed",
            "3",
            "--format",
            "csv",
            "--output",
            dest.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(dest).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "metric,before,after_targeted,after_random");
    // before: pair distances sum to 6 + 21 over 15 pairs
    // k = 1: node c (tied with d on betweenness, smaller id) splits off triangle {d,e,f}
    assert_eq!(
        lines[1].split(',').take(3).collect::<Vec<_>>(),
        vec!["component_count", "1", "2"]
    );
    assert_eq!(
        lines[3].split(',').take(2).collect::<Vec<_>>(),
        vec!["avg_path_length_largest", "1.8000"]
    );
}

#[test]
fn attack_trials_and_adaptive() {
    let (_dir, path) = fixture("net.txt", TWO_TRIANGLES);
    let out = run(
        &[
            "attack",
            &path,
            "--fraction",
            "0.34",
            "--seed",
            "1",
            "--trials",
            "4",
            "--adaptive",
            "--centrality",
            "degree",
        ],
        None,
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["meta"]["mode"], "adaptive");
    assert_eq!(v["meta"]["centrality"], "degree");
    assert_eq!(v["meta"]["seeds"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["random_trials"].as_array().unwrap().len(), 4);
    assert_eq!(v["removed"]["random"].as_array().unwrap().len(), 4);
}

#[test]
fn communities_and_analyze() {
    let (_dir, path) = fixture("net.txt", TWO_TRIANGLES);
    for algo in ["louvain", "girvan-newman"] {
        let out = run(&["communities", &path, "--algorithm", algo, "--format", "csv"], None);
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            "node,community\na,0\nb,0\nc,0\nd,1\ne,1\nf,1\n"
        );
    }
    let out = run(&["communities", &path, "--format", "dot"], None);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph G {\n  0 [label=\"a\", color="));
    assert!(dot.contains("  2 -- 3;"));

    let out = run(&["analyze", &path], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["metrics"]["component_count"], 1);
    assert_eq!(v["communities"]["community_count"], 2);
    assert_eq!(v["nodes"][2]["node"], "c");
    assert_eq!(v["nodes"][2]["betweenness"].to_string(), "0.600000");
}

#[test]
fn input_errors_exit_one_with_empty_stdout() {
    let out = run(
        &[
            "attack",
            "definitely-missing.txt",
            "--fraction",
            "0.3333",
            "--seed",
            "7",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = run(&["analyze", "-"], Some(b"a b\nc\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["communities", "-"], Some(b"x x\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());

    // a fraction that selects nobody depends on the graph, so it is an input error
    let out = run(&["attack", "-", "--fraction", "0.01"], Some(b"a b\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two_with_empty_stdout() {
    for args in [
        vec!["attack"],
        vec!["frobnicate"],
        vec!["generate", "--model", "ba", "--n", "10", "--seed", "1"],
        vec!["generate", "--model", "ba", "--n", "3", "--m", "3", "--seed", "1"],
        vec!["attack", "-", "--fraction", "1.5"],
        vec!["attack", "-", "--format", "dot"],
        vec!["attack", "-", "--trials", "0"],
    ] {
        let out = run(&args, Some(b"a b\n"));
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

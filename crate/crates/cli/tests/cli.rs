use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SAMPLE: &str = "4 4 3\n0 3 2 1 2\n0 1 2 1 3\n1 3 1 2\n2 3 2 2 3\n";
const PERIODIC: &str = "4 3 6\n0 1 4 1 2 4 5\n0 2 4 1 2 4 5\n0 3 4 1 3 4 6\n";

fn tvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvc")).args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn solve_periodic_with_validation() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("periodic.tg");
    let cover = dir.path().join("periodic.cov");
    fs::write(&input, PERIODIC).unwrap();
    let out = tvc(&[
        "solve",
        "--algo",
        "star-acov",
        "--delta",
        "3",
        "--input",
        p(&input),
        "--output",
        p(&cover),
        "--validate",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&cover).unwrap(), "0 2\n0 3\n0 5\n0 6\n");

    let out = tvc(&["validate", "--input", p(&input), "--delta", "3", "--cover", p(&cover)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_delta_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("periodic.tg");
    fs::write(&input, PERIODIC).unwrap();
    let out = tvc(&["solve", "--algo", "star-sc", "--delta", "0", "--input", p(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("window size 0"));
}

#[test]
fn invalid_cover_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("sample.tg");
    let cover = dir.path().join("bad.cov");
    fs::write(&input, SAMPLE).unwrap();
    fs::write(&cover, "3 2\n").unwrap();
    let out = tvc(&["validate", "--input", p(&input), "--delta", "2", "--cover", p(&cover)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "invalid: edge (0, 1) uncovered in window [1, 2]"
    );
}

#[test]
fn parse_errors_and_usage() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("broken.tg");
    fs::write(&input, "4 1 3\n0 3 2 2 1\n").unwrap();
    let out = tvc(&["solve", "--algo", "d-approx", "--delta", "1", "--input", p(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(
        tvc(&["solve", "--algo", "nope", "--delta", "1", "--input", p(&input)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tvc(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn star_solver_on_general_graph_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("sample.tg");
    fs::write(&input, SAMPLE).unwrap();
    let out = tvc(&["solve", "--algo", "star-acov", "--delta", "2", "--input", p(&input)]);
    assert_eq!(out.status.code(), Some(2));
    let out = tvc(&["solve", "--algo", "exact", "--delta", "2", "--input", p(&input)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 3);
}

#[test]
fn generate_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tg");
    let b = dir.path().join("b.tg");
    for path in [&a, &b] {
        let out = tvc(&[
            "generate",
            "-n",
            "32",
            "-T",
            "20",
            "-d",
            "5",
            "--seed",
            "9",
            "--output",
            p(path),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let out = tvc(&[
        "generate",
        "--family",
        "acov-worst",
        "--delta",
        "3",
        "--reps",
        "2",
        "--leaves",
        "3",
    ]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), PERIODIC);
    let out = tvc(&["generate", "--family", "sc-worst", "--delta", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2 1 3\n0 1 3 1 2 3\n");
}

#[test]
fn convert_snap_buckets_hours() {
    let dir = tempfile::tempdir().unwrap();
    let raw = dir.path().join("raw.txt");
    fs::write(&raw, "1 2 7200\n2 1 3600\n3 3 3600\n").unwrap();
    let out = tvc(&["convert-snap", "--input", p(&raw)]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2 1 2\n0 1 2 1 2\n");

    fs::write(&raw, "").unwrap();
    assert_eq!(tvc(&["convert-snap", "--input", p(&raw)]).status.code(), Some(2));
}

#[test]
fn bench_then_compare() {
    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("periodic.tg");
    let general = dir.path().join("sample.tg");
    let csv = dir.path().join("out.csv");
    let covers = dir.path().join("covers");
    fs::write(&star, PERIODIC).unwrap();
    fs::write(&general, SAMPLE).unwrap();
    let out = tvc(&[
        "bench",
        p(&star),
        p(&general),
        "--algos",
        "star-acov,exact",
        "--delta",
        "2",
        "--reps",
        "2",
        "--output",
        p(&csv),
        "--covers-dir",
        p(&covers),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "graph,algo,delta,cover_size,valid,time_ms_geomean,reps");
    assert_eq!(lines.len(), 5);
    assert!(lines
        .iter()
        .any(|l| l.starts_with("sample,star-acov,2,,skipped_not_always_star,,2")));

    // every valid row has a cover that validates
    for line in &lines[1..] {
        let cols: Vec<&str> = line.split(',').collect();
        if cols[4] == "true" {
            let cover = covers.join(format!("{}.{}.cov", cols[0], cols[1]));
            let input = dir.path().join(format!("{}.tg", cols[0]));
            let out = tvc(&["validate", "--input", p(&input), "--delta", "2", "--cover", p(&cover)]);
            assert_eq!(out.status.code(), Some(0));
        }
    }

    let out = tvc(&["compare", p(&csv), "star-acov", "exact"]);
    assert!(out.status.success());
    let report = String::from_utf8_lossy(&out.stdout);
    assert!(report.contains("pairs: 1"), "{report}");
    assert!(report.contains("improvement 0.00%"), "{report}");
}

#[test]
fn bench_without_instances_is_a_usage_error() {
    assert_eq!(tvc(&["bench", "--delta", "2"]).status.code(), Some(2));
}

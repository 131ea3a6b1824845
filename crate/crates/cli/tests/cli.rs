//! End-to-end CLI tests against the built binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sva(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sva"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sva-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, contents: &str) -> PathBuf {
    let path = scratch(name);
    fs::write(&path, contents).unwrap();
    path
}

const TRIANGLE: &str =
    r#"{"vertex_count": 3, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, 1]]}"#;

#[test]
fn check_accepts_a_valid_coloring() {
    let g = write("tri.json", TRIANGLE);
    let c = write("tri-coloring.json", r#"{"n": 2, "colors": [1, 1, -1]}"#);
    let out = sva(&["check", g.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
}

#[test]
fn check_rejects_a_monochromatic_triangle() {
    let g = write("tri2.json", TRIANGLE);
    let c = write("tri2-coloring.json", r#"{"n": 2, "colors": [1, 1, 1]}"#);
    let out = sva(&["check", g.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("cycle witness"), "{}", text);
}

#[test]
fn malformed_json_exits_2() {
    let g = write("bad.json", "{nope");
    let c = write("bad-coloring.json", r#"{"n": 2, "colors": []}"#);
    let out = sva(&["check", g.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_reports_va_2_for_positive_triangle() {
    let g = write("tri3.json", TRIANGLE);
    let out = sva(&["oracle", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("va = 2"));
}

#[test]
fn oracle_cap_exits_5() {
    let edges: Vec<String> = (0..12)
        .map(|u| format!("[{}, {}, 1]", u, u + 1))
        .collect();
    let g = write(
        "big.json",
        &format!(
            r#"{{"vertex_count": 13, "edges": [{}]}}"#,
            edges.join(", ")
        ),
    );
    let out = sva(&["oracle", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn generate_then_color_then_check_round_trip() {
    let g = scratch("gen.json");
    let out = sva(&[
        "generate", "--n", "9", "--flips", "3", "--seed", "11", "--output",
        g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);

    let c = scratch("gen-coloring.json");
    let out = sva(&[
        "color", g.to_str().unwrap(), "--mode", "triangulation", "--n", "3",
        "--output", c.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);

    let out = sva(&["check", g.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
}

#[test]
fn unbalanced_triangulation_input_exits_3() {
    // all-negative K4 contains a negative triangle
    let g = write(
        "neg.json",
        r#"{"vertex_count": 4, "edges": [[0, 1, -1], [0, 2, -1], [0, 3, -1], [1, 2, -1], [1, 3, -1], [2, 3, -1]]}"#,
    );
    let out = sva(&["color", g.to_str().unwrap(), "--mode", "triangulation", "--n", "3"]);
    assert_eq!(out.status.code(), Some(3), "{:?}", out);
}

#[test]
fn k5_input_is_not_decomposable() {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            edges.push(format!("[{}, {}, 1]", u, v));
        }
    }
    let g = write(
        "k5.json",
        &format!(r#"{{"vertex_count": 5, "edges": [{}]}}"#, edges.join(", ")),
    );
    let out = sva(&["color", g.to_str().unwrap(), "--mode", "k5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(4), "{:?}", out);
}

#[test]
fn balance_prints_a_potential_or_witness() {
    let g = write("bal.json", TRIANGLE);
    let out = sva(&["balance", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("balanced"));

    let g = write(
        "unbal.json",
        r#"{"vertex_count": 3, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, -1]]}"#,
    );
    let out = sva(&["balance", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("negative cycle"));
}

#[test]
fn switch_writes_a_parseable_graph() {
    let g = write("sw.json", TRIANGLE);
    let out_path = scratch("switched.json");
    let out = sva(&[
        "switch", g.to_str().unwrap(), "--set", "0", "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    // edges at vertex 0 flip sign, edge 1-2 keeps its sign
    let edges = parsed["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 3);
}

#[test]
fn decompose_emits_leaves_and_joins() {
    let g = write("oct.json", r#"{"vertex_count": 6, "edges": [[0,1,1],[0,2,1],[0,3,1],[0,4,1],[1,2,1],[2,3,1],[3,4,1],[4,1,1],[5,1,1],[5,2,1],[5,3,1],[5,4,1]]}"#);
    let out = sva(&["decompose", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    assert_eq!(parsed["leaves"].as_array().unwrap().len(), 1);
    assert_eq!(parsed["leaves"][0]["kind"], "triangulation");
}

#[test]
fn property_suite_reports_and_exits_0() {
    let out = sva(&[
        "property", "--suite", "wagner", "--count", "25", "--seed", "9", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["passed"], 25);
    assert_eq!(parsed["seed"], 9);
}

#[test]
fn property_zero_count_passes() {
    let out = sva(&["property", "--suite", "k5", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn wagner_mode_colors_the_canonical_graph() {
    let mut edges: Vec<String> = (0..8)
        .map(|i| format!("[{}, {}, 1]", i, (i + 1) % 8))
        .collect();
    for i in 0..4 {
        edges.push(format!("[{}, {}, 1]", i, i + 4));
    }
    let g = write(
        "wagner.json",
        &format!(r#"{{"vertex_count": 8, "edges": [{}]}}"#, edges.join(", ")),
    );
    let c = scratch("wagner-coloring.json");
    let out = sva(&[
        "color", g.to_str().unwrap(), "--mode", "wagner", "--n", "3",
        "--output", c.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let out = sva(&["check", g.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
